#pragma once

#include <random>

#include "qperm/matrix.hpp"

namespace qperm {

/*
 * Deterministic source of random exact values for the randomized
 * verification routines. Magnitudes are kept small (numerators and
 * denominators bounded by 100 by default) so symbolic coefficient growth
 * stays manageable.
 */
class Sampler {
public:
    explicit Sampler(std::uint64_t seed = 0) : rng_(seed) {}

    long integer(long lo, long hi);
    Rat rational(long max_num = 100, long max_den = 100);
    Rat nonzero_rational(long max_num = 100, long max_den = 100);
    // Nonzero rational with |value| != 1, suitable as a generic base point.
    Rat generic_scalar(long max_num = 12, long max_den = 5);

    Laurent small_laurent(int max_terms = 3, long max_abs_exp = 3, long max_num = 9);

    ExponentMatrix rational_matrix(std::size_t n, long max_num = 100, long max_den = 100);
    ExponentMatrix integer_matrix(std::size_t n, long lo = -9, long hi = 9);
    RingMatrix constant_matrix(std::size_t n, long max_num = 100, long max_den = 100);
    RingMatrix laurent_matrix(std::size_t n);
    // Random rational lower Hessenberg matrix (zero above the superdiagonal).
    RingMatrix hessenberg_matrix(std::size_t n, long max_num = 100, long max_den = 100);
    ExponentMatrix hessenberg_rational(std::size_t n, long max_num = 100, long max_den = 100);

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace qperm
