#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qperm {

struct VerifyOptions {
    std::uint64_t seed = 0;
    int jobs = 1;
    bool include_performance = true;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

// Runs the full verification suite: one result per criterion, in order.
std::vector<CriterionResult> run_verification(const VerifyOptions& opts);

// Formats a single pass/fail line.
std::string format_criterion(const CriterionResult& r);

} // namespace qperm
