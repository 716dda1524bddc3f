#pragma once

#include <stdexcept>
#include <string>

namespace qperm {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& m) : Error(m) {}
};

struct SizeTooLarge : Error {
    explicit SizeTooLarge(const std::string& m) : Error(m) {}
};

// Raised when (-q)^e is requested with a non-integer exponent e.
struct NonIntegerSignedPower : Error {
    explicit NonIntegerSignedPower(const std::string& m) : Error(m) {}
};

struct NonIntegerExponent : Error {
    explicit NonIntegerExponent(const std::string& m) : Error(m) {}
};

struct NonIntegerTargetExponent : Error {
    explicit NonIntegerTargetExponent(const std::string& m) : Error(m) {}
};

struct ZeroQ : Error {
    explicit ZeroQ(const std::string& m) : Error(m) {}
};

struct QAtSingularity : Error {
    explicit QAtSingularity(const std::string& m) : Error(m) {}
};

struct NotHessenberg : Error {
    explicit NotHessenberg(const std::string& m) : Error(m) {}
};

struct NotAPreserver : Error {
    explicit NotAPreserver(const std::string& m) : Error(m) {}
};

struct InconsistentTarget : Error {
    explicit InconsistentTarget(const std::string& m) : Error(m) {}
};

struct BadIndexSet : Error {
    explicit BadIndexSet(const std::string& m) : Error(m) {}
};

struct SingularG : Error {
    explicit SingularG(const std::string& m) : Error(m) {}
};

// A congruence-satisfying 4x4 converter whose leading 2x2 block has rank one
// would contradict the two-family classification; this must never fire.
struct RankOneParadox : Error {
    explicit RankOneParadox(const std::string& m) : Error(m) {}
};

struct ParseError : Error {
    ParseError(const std::string& m, std::size_t position)
        : Error(m + " (at offset " + std::to_string(position) + ")"), offset(position) {}
    std::size_t offset;
};

struct UsageError : Error {
    explicit UsageError(const std::string& m) : Error(m) {}
};

} // namespace qperm
