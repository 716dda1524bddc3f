#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "qperm/rat.hpp"

namespace qperm {

/*
 * Element of Q[t, t^-1] together with a scale D meaning q = t^D, so that
 * rational powers of q (half-integer exponents and the like) stay exact.
 * Invariants: no zero coefficients are stored, and the representation is
 * canonical (D is reduced by the gcd of all t-exponents, zero has D = 1).
 * Values with different scales interoperate by rescaling to the lcm.
 */
class Laurent {
public:
    Laurent() : scale_(1) {}
    explicit Laurent(const Rat& c) : scale_(1) {
        if (!c.is_zero()) c_[0] = c;
    }
    Laurent(int c) : Laurent(Rat(c)) {}

    // c * q^e for rational e.
    static Laurent term(const Rat& c, const Rat& q_exp);
    // q^e, or (-q)^e when base_sign = -1 (requires integer e).
    static Laurent q_power(const Rat& e, int base_sign = +1);
    static Laurent q() { return q_power(Rat(1)); }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    // True when the value is a constant (possibly zero) element of Q.
    bool is_constant() const;
    // The constant term as a Rat; requires is_constant().
    Rat constant_value() const;

    long long scale() const { return scale_; }
    std::size_t term_count() const { return c_.size(); }
    // Terms as (q-exponent, coefficient) pairs in ascending exponent order.
    std::vector<std::pair<Rat, Rat>> terms() const;

    Laurent operator-() const;
    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent& operator*=(const Laurent& o);
    Laurent& operator*=(const Rat& c);

    friend Laurent operator+(Laurent a, const Laurent& b) { a += b; return a; }
    friend Laurent operator-(Laurent a, const Laurent& b) { a -= b; return a; }
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    friend Laurent operator*(Laurent a, const Rat& c) { a *= c; return a; }
    friend Laurent operator*(const Rat& c, Laurent a) { a *= c; return a; }

    friend bool operator==(const Laurent& a, const Laurent& b) {
        return a.scale_ == b.scale_ && a.c_ == b.c_;
    }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

    Laurent pow(unsigned long k) const;

    // Exact quotient a / b in Q[t, t^-1]; throws if b = 0 or a remainder
    // appears (exactness is guaranteed wherever this is used).
    static Laurent exact_div(const Laurent& a, const Laurent& b);

    // Evaluates at a concrete rational q0 != 0. When the scale D is greater
    // than one this requires q0 to admit an exact rational D-th root.
    Rat substitute(const Rat& q0) const;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Laurent& v) { return os << v.str(); }

private:
    long long scale_;                 // q = t^scale_, scale_ >= 1
    std::map<long long, Rat> c_;      // t-exponent -> coefficient, no zeros

    void normalize_();
    // Rescales exponents of both operands to a common scale D.
    static long long common_scale_(const Laurent& a, const Laurent& b,
                                   long long& mul_a, long long& mul_b);
    friend class LaurentDiv;
};

// ADL hook shared with Rat so fraction-free elimination can be written
// generically over both scalar types.
inline Laurent exact_div(const Laurent& a, const Laurent& b) { return Laurent::exact_div(a, b); }
inline Rat exact_div(const Rat& a, const Rat& b) { return a / b; }

} // namespace qperm
