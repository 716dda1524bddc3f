#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qperm/evaluator.hpp"
#include "qperm/hessenberg.hpp"
#include "qperm/linalg.hpp"
#include "qperm/sampling.hpp"

using namespace qperm;

namespace {

// Ryser inclusion-exclusion oracle for the permanent of a rational matrix.
Rat permanent_ryser(const ExponentMatrix& a) {
    const std::size_t n = a.n();
    Rat total(0);
    for (std::size_t mask = 1; mask < (1ull << n); ++mask) {
        Rat prod(1);
        for (std::size_t i = 0; i < n; ++i) {
            Rat row_sum(0);
            for (std::size_t j = 0; j < n; ++j)
                if (mask >> j & 1ull) row_sum += a.at(i, j);
            prod *= row_sum;
        }
        const std::size_t k = static_cast<std::size_t>(__builtin_popcountll(mask));
        if ((n - k) % 2 == 1) prod = -prod;
        total += prod;
    }
    return total;
}

} // namespace

TEST_CASE("q-permanent of the identity and of J_2") {
    CHECK(qperm_naive(RingMatrix::identity(5)).is_one());
    const Laurent j2 = qperm_naive(RingMatrix::ones(2));
    CHECK(j2 == Laurent(1) + Laurent::q());
    CHECK_THROWS_AS(qperm_naive(RingMatrix::identity(11)), SizeTooLarge);
}

TEST_CASE("upper triangular input collapses to the diagonal product") {
    Sampler sampler(10);
    ExponentMatrix m(4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i; j < 4; ++j) m.at(i, j) = sampler.nonzero_rational(9, 4);
    const RingMatrix a = RingMatrix::from_rational(m);
    Rat diag(1);
    for (std::size_t i = 0; i < 4; ++i) diag *= m.at(i, i);
    CHECK(qperm_naive(a) == Laurent(diag));
    CHECK(det_bareiss(a) == Laurent(diag));
}

TEST_CASE("naive term count is n!") {
    const QPermResult r = qperm_naive_result(RingMatrix::ones(4));
    CHECK(r.term_count == 24);
    CHECK(r.method == EvalMethod::Naive);
}

TEST_CASE("permanent matches the Ryser oracle") {
    Sampler sampler(11);
    CHECK(permanent(RingMatrix::identity(4)).is_one());
    CHECK(permanent(RingMatrix::ones(3)) == Laurent(6));
    for (int t = 0; t < 15; ++t) {
        const ExponentMatrix m = sampler.integer_matrix(4);
        CHECK(permanent(RingMatrix::from_rational(m)).constant_value() == permanent_ryser(m));
        CHECK(permanent_substituted(m) == permanent_ryser(m));
    }
}

TEST_CASE("substitution interpolates permanent and determinant") {
    Sampler sampler(12);
    for (std::size_t n = 2; n <= 6; ++n)
        for (int t = 0; t < 5; ++t) {
            const ExponentMatrix m = sampler.rational_matrix(n, 9, 4);
            const RingMatrix a = RingMatrix::from_rational(m);
            CHECK(qperm_substituted(a, Rat(1)) == permanent(a).constant_value());
            CHECK(qperm_substituted(a, Rat(-1)) == det_rational_scaled(m));
            const Rat q0 = sampler.generic_scalar();
            CHECK(qperm_substituted(a, q0) == qperm_naive(a).substitute(q0));
        }
    CHECK(qperm_substituted(RingMatrix::ones(2), Rat(2)) == Rat(3));
    CHECK_THROWS_AS(qperm_substituted(RingMatrix::ones(2), Rat(0)), ZeroQ);
}

TEST_CASE("signed expansion equals elimination") {
    Sampler sampler(13);
    for (std::size_t n = 2; n <= 6; ++n)
        for (int t = 0; t < 5; ++t) {
            const RingMatrix a = sampler.constant_matrix(n, 9, 4);
            CHECK(det_expansion(a) == det_bareiss(a));
        }
}

TEST_CASE("schur_apply") {
    Sampler sampler(14);
    const RingMatrix a = sampler.constant_matrix(3);
    CHECK(schur_apply(ExponentMatrix(3), a, +1) == a);

    // uniform exponent (n-1)/2 rescales every entry by q^((n-1)/2)
    const ExponentMatrix half = ExponentMatrix::ones(3) * Rat(1, 1) * Rat(3 - 1, 2);
    const RingMatrix scaled = schur_apply(half, a, +1);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(scaled.at(i, j) == Laurent::q_power(Rat(1)) * a.at(i, j));

    // single superdiagonal entry of E_{12} picks up one factor q
    RingMatrix e12(2);
    e12.at(0, 1) = Laurent(1);
    const RingMatrix weighted = schur_apply(h0(2), e12, +1);
    CHECK(weighted.at(0, 1) == Laurent::q());

    // non-integer exponents are rejected under the signed base unless the
    // entry is structurally zero
    ExponentMatrix bad(2);
    bad.at(0, 0) = Rat(1, 2);
    CHECK_THROWS_AS(schur_apply(bad, RingMatrix::ones(2), -1), NonIntegerSignedPower);
    RingMatrix zero_there(2);
    zero_there.at(1, 1) = Laurent(3);
    CHECK_NOTHROW(schur_apply(bad, zero_there, -1));
    CHECK_THROWS_AS(schur_apply(ExponentMatrix(3), RingMatrix::ones(2), +1), DimensionMismatch);
}

TEST_CASE("row scaling and zero rows") {
    Sampler sampler(15);
    for (int t = 0; t < 10; ++t) {
        RingMatrix a = sampler.constant_matrix(4, 9, 4);
        const Laurent before = qperm_naive(a);
        const Rat s = sampler.nonzero_rational(9, 4);
        a.scale_row(1, Laurent(s));
        CHECK(qperm_naive(a) == Laurent(s) * before);
        for (std::size_t j = 0; j < 4; ++j) a.at(2, j) = Laurent();
        CHECK(qperm_naive(a).is_zero());
    }
}

TEST_CASE("reversal duality holds symbolically") {
    Sampler sampler(16);
    CHECK(duality_check(RingMatrix::identity(3)));
    for (int t = 0; t < 5; ++t) {
        RingMatrix a(4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) a.at(i, j) = sampler.small_laurent(2, 2, 5);
        CHECK(duality_check(a));
    }
    for (int t = 0; t < 5; ++t) CHECK(duality_check(sampler.constant_matrix(5, 9, 4)));
}

TEST_CASE("rational fast path agrees with the group-loop evaluator") {
    Sampler sampler(17);
    for (int t = 0; t < 10; ++t) {
        const RingMatrix a = sampler.constant_matrix(5, 9, 4);
        CHECK(qperm_naive(a) == qperm_with_exponents(a, ExponentMatrix(5), 1));
    }
}
