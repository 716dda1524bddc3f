#include "qperm/sampling.hpp"

namespace qperm {

long Sampler::integer(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(rng_);
}

Rat Sampler::rational(long max_num, long max_den) {
    return Rat(integer(-max_num, max_num), integer(1, max_den));
}

Rat Sampler::nonzero_rational(long max_num, long max_den) {
    for (;;) {
        Rat r = rational(max_num, max_den);
        if (!r.is_zero()) return r;
    }
}

Rat Sampler::generic_scalar(long max_num, long max_den) {
    for (;;) {
        Rat r = rational(max_num, max_den);
        if (!r.is_zero() && !r.abs().is_one()) return r;
    }
}

Laurent Sampler::small_laurent(int max_terms, long max_abs_exp, long max_num) {
    const int k = static_cast<int>(integer(1, max_terms));
    Laurent v;
    for (int t = 0; t < k; ++t)
        v += Laurent::term(rational(max_num, 4), Rat(integer(-max_abs_exp, max_abs_exp)));
    return v;
}

ExponentMatrix Sampler::rational_matrix(std::size_t n, long max_num, long max_den) {
    ExponentMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rational(max_num, max_den);
    return m;
}

ExponentMatrix Sampler::integer_matrix(std::size_t n, long lo, long hi) {
    ExponentMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = Rat(integer(lo, hi));
    return m;
}

RingMatrix Sampler::constant_matrix(std::size_t n, long max_num, long max_den) {
    return RingMatrix::from_rational(rational_matrix(n, max_num, max_den));
}

RingMatrix Sampler::laurent_matrix(std::size_t n) {
    RingMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = small_laurent();
    return m;
}

RingMatrix Sampler::hessenberg_matrix(std::size_t n, long max_num, long max_den) {
    return RingMatrix::from_rational(hessenberg_rational(n, max_num, max_den));
}

ExponentMatrix Sampler::hessenberg_rational(std::size_t n, long max_num, long max_den) {
    ExponentMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= std::min(i + 1, n - 1); ++j)
            m.at(i, j) = rational(max_num, max_den);
    return m;
}

} // namespace qperm
