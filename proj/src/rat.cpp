#include "qperm/rat.hpp"

namespace qperm {

Rat Rat::from_string(const std::string& s) {
    if (s.empty()) throw Error("Rat: empty string");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw Error("Rat: cannot parse '" + s + "'");
    if (q.get_den() == 0) throw Error("Rat: zero denominator in '" + s + "'");
    q.canonicalize();
    return Rat(q);
}

long Rat::to_long() const {
    if (!is_integer()) throw Error("Rat: " + str() + " is not an integer");
    mpz_class n = num();
    if (!n.fits_slong_p()) throw Error("Rat: " + str() + " out of long range");
    return n.get_si();
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw Error("Rat: division by zero");
    v_ /= o.v_;
    return *this;
}

Rat Rat::pow(long e) const {
    if (e == 0) return Rat(1);
    if (is_zero()) {
        if (e < 0) throw Error("Rat: negative power of zero");
        return Rat(0);
    }
    const unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), k);
    return e > 0 ? Rat(n, d) : Rat(d, n);
}

std::string Rat::str() const {
    std::string out = num().get_str();
    if (!is_integer()) {
        out += "/";
        out += den().get_str();
    }
    return out;
}

} // namespace qperm
