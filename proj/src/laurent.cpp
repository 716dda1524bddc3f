#include "qperm/laurent.hpp"

#include <numeric>

#include "qperm/errors.hpp"

namespace qperm {

namespace {

long long checked_ll(const mpz_class& z, const char* what) {
    if (!z.fits_slong_p()) throw Error(std::string("Laurent: ") + what + " out of range");
    return z.get_si();
}

} // namespace

void Laurent::normalize_() {
    for (auto it = c_.begin(); it != c_.end();) {
        if (it->second.is_zero())
            it = c_.erase(it);
        else
            ++it;
    }
    if (c_.empty()) {
        scale_ = 1;
        return;
    }
    long long g = scale_;
    for (const auto& [e, c] : c_) g = std::gcd(g, e < 0 ? -e : e);
    if (g > 1) {
        std::map<long long, Rat> reduced;
        for (auto& [e, c] : c_) reduced.emplace(e / g, std::move(c));
        c_ = std::move(reduced);
        scale_ /= g;
    }
}

long long Laurent::common_scale_(const Laurent& a, const Laurent& b,
                                 long long& mul_a, long long& mul_b) {
    const long long d = std::lcm(a.scale_, b.scale_);
    mul_a = d / a.scale_;
    mul_b = d / b.scale_;
    return d;
}

Laurent Laurent::term(const Rat& c, const Rat& q_exp) {
    Laurent r;
    if (c.is_zero()) return r;
    r.scale_ = checked_ll(q_exp.den(), "exponent denominator");
    r.c_[checked_ll(q_exp.num(), "exponent numerator")] = c;
    r.normalize_();
    return r;
}

Laurent Laurent::q_power(const Rat& e, int base_sign) {
    if (base_sign != 1 && base_sign != -1) throw Error("Laurent: base sign must be +-1");
    Rat coeff(1);
    if (base_sign == -1) {
        if (!e.is_integer())
            throw NonIntegerSignedPower("(-q)^e requires integer e, got e = " + e.str());
        if (mpz_odd_p(e.num().get_mpz_t())) coeff = Rat(-1);
    }
    return term(coeff, e);
}

bool Laurent::is_one() const {
    return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second.is_one();
}

bool Laurent::is_constant() const {
    return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0);
}

Rat Laurent::constant_value() const {
    if (c_.empty()) return Rat(0);
    if (!is_constant()) throw Error("Laurent: " + str() + " is not constant");
    return c_.begin()->second;
}

std::vector<std::pair<Rat, Rat>> Laurent::terms() const {
    std::vector<std::pair<Rat, Rat>> out;
    out.reserve(c_.size());
    for (const auto& [e, c] : c_) out.emplace_back(Rat(e, scale_), c);
    return out;
}

Laurent Laurent::operator-() const {
    Laurent r(*this);
    for (auto& [e, c] : r.c_) c = -c;
    return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
    long long ma, mb;
    const long long d = common_scale_(*this, o, ma, mb);
    if (ma != 1) {
        std::map<long long, Rat> scaled;
        for (auto& [e, c] : c_) scaled.emplace(e * ma, std::move(c));
        c_ = std::move(scaled);
        scale_ = d;
    }
    for (const auto& [e, c] : o.c_) c_[e * mb] += c;
    normalize_();
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    *this += -o;
    return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    if (a.is_zero() || b.is_zero()) return Laurent();
    long long ma, mb;
    Laurent r;
    r.scale_ = Laurent::common_scale_(a, b, ma, mb);
    for (const auto& [ea, ca] : a.c_)
        for (const auto& [eb, cb] : b.c_) r.c_[ea * ma + eb * mb] += ca * cb;
    r.normalize_();
    return r;
}

Laurent& Laurent::operator*=(const Laurent& o) {
    *this = *this * o;
    return *this;
}

Laurent& Laurent::operator*=(const Rat& c) {
    if (c.is_zero()) {
        c_.clear();
        scale_ = 1;
        return *this;
    }
    for (auto& [e, v] : c_) v *= c;
    return *this;
}

Laurent Laurent::pow(unsigned long k) const {
    Laurent r(Rat(1));
    Laurent base(*this);
    while (k > 0) {
        if (k & 1UL) r *= base;
        k >>= 1UL;
        if (k > 0) base *= base;
    }
    return r;
}

Laurent Laurent::exact_div(const Laurent& a, const Laurent& b) {
    if (b.is_zero()) throw Error("Laurent: division by zero");
    if (a.is_zero()) return Laurent();

    long long ma, mb;
    const long long d = common_scale_(a, b, ma, mb);

    // Shift both operands so they become ordinary polynomials in t with a
    // nonzero constant term; the exact quotient is then a polynomial too.
    const long long min_a = a.c_.begin()->first * ma;
    const long long min_b = b.c_.begin()->first * mb;

    std::map<long long, Rat> f, g;
    for (const auto& [e, c] : a.c_) f[e * ma - min_a] = c;
    for (const auto& [e, c] : b.c_) g[e * mb - min_b] = c;

    const long long deg_g = g.rbegin()->first;
    const Rat& lead_g = g.rbegin()->second;
    std::map<long long, Rat> quot;

    while (!f.empty()) {
        const long long deg_f = f.rbegin()->first;
        if (deg_f < deg_g) throw Error("Laurent: non-exact division (remainder of lower degree)");
        const long long sh = deg_f - deg_g;
        const Rat coef = f.rbegin()->second / lead_g;
        quot[sh] = coef;
        for (const auto& [e, c] : g) {
            auto it = f.find(e + sh);
            Rat nv = (it == f.end() ? Rat(0) : it->second) - coef * c;
            if (nv.is_zero()) {
                if (it != f.end()) f.erase(it);
            } else {
                f[e + sh] = nv;
            }
        }
    }

    Laurent r;
    r.scale_ = d;
    for (auto& [e, c] : quot) r.c_.emplace(e + min_a - min_b, std::move(c));
    r.normalize_();
    return r;
}

Rat Laurent::substitute(const Rat& q0) const {
    if (q0.is_zero()) throw ZeroQ("substitution requires q != 0");
    Rat t0 = q0;
    if (scale_ > 1) {
        // Need t0 with t0^D = q0 exactly.
        mpz_class n = q0.num(), d = q0.den(), rn, rd;
        if (q0.sign() < 0 && scale_ % 2 == 0)
            throw Error("Laurent: no exact real " + std::to_string(scale_) +
                        "-th root of " + q0.str());
        const int exact_n = mpz_root(rn.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(scale_));
        const int exact_d = mpz_root(rd.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(scale_));
        if (!exact_n || !exact_d)
            throw Error("Laurent: " + q0.str() + " has no exact rational " +
                        std::to_string(scale_) + "-th root");
        t0 = Rat(rn, rd);
    }
    Rat acc(0);
    for (const auto& [e, c] : c_) acc += c * t0.pow(e);
    return acc;
}

std::string Laurent::str() const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : c_) {
        const bool neg = c.sign() < 0;
        const Rat mag = c.abs();
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        const Rat qe(e, scale_);
        std::string epart;
        if (!qe.is_zero()) {
            epart = "q";
            if (!qe.is_one()) {
                if (qe.is_integer())
                    epart += "^" + qe.str();
                else
                    epart += "^(" + qe.str() + ")";
            }
        }
        if (epart.empty()) {
            out += mag.str();
        } else if (mag.is_one()) {
            out += epart;
        } else {
            out += mag.str() + "*" + epart;
        }
    }
    return out;
}

} // namespace qperm
