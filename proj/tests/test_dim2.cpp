#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qperm/dim2.hpp"
#include "qperm/evaluator.hpp"

using namespace qperm;

namespace {

ExponentMatrix g2(long a, long b, long c, long d) {
    ExponentMatrix g(2);
    g.at(0, 0) = Rat(a);
    g.at(0, 1) = Rat(b);
    g.at(1, 0) = Rat(c);
    g.at(1, 1) = Rat(d);
    return g;
}

ExponentMatrix random_invertible_g(Sampler& sampler) {
    for (;;) {
        const ExponentMatrix g = sampler.rational_matrix(2, 9, 4);
        if (!(g.at(0, 0) * g.at(1, 1) - g.at(0, 1) * g.at(1, 0)).is_zero()) return g;
    }
}

} // namespace

TEST_CASE("quadratic form matrices represent 2 det and 2 P_q") {
    Sampler sampler(60);
    const RingMatrix jdet = form_matrix_det();
    const RingMatrix jq = form_matrix_q();
    for (int t = 0; t < 50; ++t) {
        const ExponentMatrix x = sampler.rational_matrix(2, 9, 4);
        const Rat w[4] = {x.at(0, 0), x.at(0, 1), x.at(1, 0), x.at(1, 1)};
        Laurent qdet, qq;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                qdet += jdet.at(i, j) * Laurent(w[i] * w[j]);
                qq += jq.at(i, j) * Laurent(w[i] * w[j]);
            }
        const Rat det2 = x.at(0, 0) * x.at(1, 1) - x.at(0, 1) * x.at(1, 0);
        const Laurent perm2 = Laurent(x.at(0, 0) * x.at(1, 1)) +
                              Laurent::q() * Laurent(x.at(0, 1) * x.at(1, 0));
        CHECK(qdet == Laurent(det2 * Rat(2)));
        CHECK(qq == perm2 * Laurent(2));
    }
}

TEST_CASE("the 2x2 skew identity X^T E X = det(X) E") {
    Sampler sampler(61);
    RingMatrix e(2);
    e.at(0, 1) = Laurent(1);
    e.at(1, 0) = Laurent(-1);
    for (int t = 0; t < 1000; ++t) {
        const ExponentMatrix x = sampler.rational_matrix(2, 9, 4);
        const RingMatrix xm = RingMatrix::from_rational(x);
        const Rat dx = x.at(0, 0) * x.at(1, 1) - x.at(0, 1) * x.at(1, 0);
        CHECK(xm.transpose().mul(e).mul(xm) == e.scaled(Laurent(dx)));
    }
}

TEST_CASE("family I builds verified converters") {
    Sampler sampler(62);
    // the degenerate corner: G = I, alpha = beta = 0 forces gamma = -q
    const RingMatrix m0 = build_family_one({g2(1, 0, 0, 1), Rat(0), Rat(0)});
    CHECK(verify_congruence(m0));
    CHECK(m0.at(2, 2) == Laurent::term(Rat(-1), Rat(1)));
    CHECK(m0.at(3, 3) == Laurent(1));

    CHECK(verify_congruence(build_family_one({g2(1, 0, 0, 1), Rat(1), Rat(1)})));
    CHECK(verify_congruence(build_family_one({g2(1, 2, 3, 4), Rat(2), Rat(-1)})));
    for (int t = 0; t < 20; ++t) {
        const FamilyIParams p{random_invertible_g(sampler), sampler.rational(9, 4),
                              sampler.rational(9, 4)};
        const RingMatrix m = build_family_one(p);
        CHECK(verify_congruence(m));
        CHECK(verify_conversion_identity(m, 20, sampler));
    }
    CHECK_THROWS_AS(build_family_one({g2(1, 2, 2, 4), Rat(0), Rat(0)}), SingularG);
}

TEST_CASE("family II builds verified converters") {
    Sampler sampler(63);
    const RingMatrix m0 = build_family_two({g2(1, 0, 0, 1), Rat(0)});
    CHECK(verify_congruence(m0));
    CHECK(m0.at(0, 2) == Laurent::q());
    CHECK(m0.at(1, 3) == Laurent(-1));
    CHECK(m0.at(2, 0) == Laurent(1));

    CHECK(verify_congruence(build_family_two({g2(1, 0, 0, 1), Rat(3)})));
    CHECK(verify_congruence(build_family_two({g2(0, 1, 1, 0), Rat(1)})));
    for (int t = 0; t < 20; ++t) {
        const FamilyIIParams p{random_invertible_g(sampler), sampler.rational(9, 4)};
        const RingMatrix m = build_family_two(p);
        CHECK(verify_congruence(m));
        CHECK(verify_conversion_identity(m, 20, sampler));
    }
    CHECK_THROWS_AS(build_family_two({g2(2, 4, 1, 2), Rat(0)}), SingularG);
}

TEST_CASE("congruence rejects the identity map") {
    CHECK_FALSE(verify_congruence(RingMatrix::identity(4)));
    CHECK(std::holds_alternative<NotAConverter>(classify(RingMatrix::identity(4))));
}

TEST_CASE("classification round-trips family I parameters") {
    Sampler sampler(64);
    for (int t = 0; t < 30; ++t) {
        const FamilyIParams p{random_invertible_g(sampler), sampler.rational(9, 4),
                              sampler.rational(9, 4)};
        const Classification c = classify(build_family_one(p));
        REQUIRE(std::holds_alternative<ClassifiedFamilyI>(c));
        const auto& f = std::get<ClassifiedFamilyI>(c);
        CHECK(f.g == p.g);
        CHECK(f.alpha == p.alpha);
        CHECK(f.beta == p.beta);
        // the accompanying scalar satisfies alpha beta + gamma = -q / det(G)
        const Rat dg = p.g.at(0, 0) * p.g.at(1, 1) - p.g.at(0, 1) * p.g.at(1, 0);
        CHECK(Laurent(f.alpha * f.beta) + f.gamma == Laurent::term(-(Rat(1) / dg), Rat(1)));
    }
}

TEST_CASE("classification round-trips family II parameters") {
    Sampler sampler(65);
    for (int t = 0; t < 30; ++t) {
        const FamilyIIParams p{random_invertible_g(sampler), sampler.rational(9, 4)};
        const Classification c = classify(build_family_two(p));
        REQUIRE(std::holds_alternative<ClassifiedFamilyII>(c));
        const auto& f = std::get<ClassifiedFamilyII>(c);
        CHECK(f.g == p.g);
        CHECK(f.mu == p.mu);
    }
    // explicit example with a permutation block
    const Classification c = classify(build_family_two({g2(1, 2, 3, 4), Rat(5)}));
    REQUIRE(std::holds_alternative<ClassifiedFamilyII>(c));
    CHECK(std::get<ClassifiedFamilyII>(c).mu == Rat(5));
}

TEST_CASE("random non-converters classify as none and never paradox") {
    Sampler sampler(66);
    for (int t = 0; t < 50; ++t) {
        RingMatrix m(4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) m.at(i, j) = Laurent(sampler.rational(5, 3));
        CHECK_NOTHROW((void)classify(m));
        // random rational matrices essentially never satisfy the congruence
        CHECK(std::holds_alternative<NotAConverter>(classify(m)));
    }
}

TEST_CASE("conversion identity fails for non-converters") {
    Sampler sampler(67);
    CHECK_FALSE(verify_conversion_identity(RingMatrix::identity(4), 5, sampler));
}
