#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>

#include "qperm/errors.hpp"

namespace qperm {

/*
 * Exact rational number backed by GMP. Always stored in lowest terms with a
 * positive denominator; every operation is exact.
 */
class Rat {
public:
    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}
    Rat(long n) : v_(static_cast<long>(n)) {}
    Rat(long n, long d) : v_(n, d) { canon_(); }
    Rat(const mpz_class& n, const mpz_class& d) : v_(n, d) { canon_(); }
    explicit Rat(const mpz_class& n) : v_(n) {}
    explicit Rat(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    // Accepts "p", "-p", "p/q".
    static Rat from_string(const std::string& s);

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    // Requires an integral value fitting in long.
    long to_long() const;

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    Rat abs() const { return Rat(mpq_class(::abs(v_))); }

    // Exact integer power; negative exponents require a nonzero value.
    Rat pow(long e) const;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

private:
    mpq_class v_;
    void canon_() {
        if (v_.get_den() == 0) throw Error("Rat: zero denominator");
        v_.canonicalize();
    }
};

// lcm of the denominators of a range of Rat values (at least 1).
template <class It>
mpz_class denominator_lcm(It first, It last) {
    mpz_class l = 1;
    for (; first != last; ++first) {
        mpz_class d = first->den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    return l;
}

} // namespace qperm
