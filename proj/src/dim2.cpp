#include "qperm/dim2.hpp"

#include <optional>

#include "qperm/errors.hpp"
#include "qperm/evaluator.hpp"

namespace qperm {

namespace {

Rat det2(const ExponentMatrix& g) {
    return g.at(0, 0) * g.at(1, 1) - g.at(0, 1) * g.at(1, 0);
}

Laurent det2_laurent(const RingMatrix& m, std::size_t r0, std::size_t c0) {
    return m.at(r0, c0) * m.at(r0 + 1, c0 + 1) - m.at(r0, c0 + 1) * m.at(r0 + 1, c0);
}

void put_block(RingMatrix& m, std::size_t r0, std::size_t c0, const RingMatrix& b) {
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) m.at(r0 + i, c0 + j) = b.at(i, j);
}

RingMatrix block_of(const RingMatrix& m, std::size_t r0, std::size_t c0) {
    RingMatrix b(2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) b.at(i, j) = m.at(r0 + i, c0 + j);
    return b;
}

const Laurent& require_invertible_g(const ExponentMatrix& g) {
    static const Laurent dummy;
    if (g.n() != 2) throw DimensionMismatch("family parameters need a 2x2 block");
    if (det2(g).is_zero()) throw SingularG("family parameters need an invertible block");
    return dummy;
}

} // namespace

RingMatrix form_matrix_det() {
    RingMatrix j(4);
    j.at(0, 3) = Laurent(1);
    j.at(1, 2) = Laurent(-1);
    j.at(2, 1) = Laurent(-1);
    j.at(3, 0) = Laurent(1);
    return j;
}

RingMatrix form_matrix_q() {
    RingMatrix j(4);
    j.at(0, 3) = Laurent(1);
    j.at(1, 2) = Laurent::q();
    j.at(2, 1) = Laurent::q();
    j.at(3, 0) = Laurent(1);
    return j;
}

RingMatrix build_family_one(const FamilyIParams& p) {
    require_invertible_g(p.g);
    const Rat a = p.g.at(0, 0), b = p.g.at(0, 1), c = p.g.at(1, 0), d = p.g.at(1, 1);
    const Laurent inv_q = Laurent::q_power(Rat(-1));
    const Laurent gamma =
        Laurent::term(-(Rat(1) / det2(p.g)), Rat(1)) - Laurent(p.alpha * p.beta);

    RingMatrix m(4);
    // top-left: G; bottom-left: alpha G
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            m.at(i, j) = Laurent(p.g.at(i, j));
            m.at(i + 2, j) = Laurent(p.alpha * p.g.at(i, j));
        }
    // top-right: B = beta * G * diag(-1, 1/q)
    m.at(0, 2) = Laurent(-(p.beta * a));
    m.at(0, 3) = Laurent(p.beta * b) * inv_q;
    m.at(1, 2) = Laurent(-(p.beta * c));
    m.at(1, 3) = Laurent(p.beta * d) * inv_q;
    // bottom-right: D = gamma * G * diag(1, -1/q)
    m.at(2, 2) = gamma * Laurent(a);
    m.at(2, 3) = -(gamma * Laurent(b) * inv_q);
    m.at(3, 2) = gamma * Laurent(c);
    m.at(3, 3) = -(gamma * Laurent(d) * inv_q);
    return m;
}

RingMatrix build_family_two(const FamilyIIParams& p) {
    require_invertible_g(p.g);
    const Rat a = p.g.at(0, 0), b = p.g.at(0, 1), c = p.g.at(1, 0), d = p.g.at(1, 1);
    const Rat inv_det = Rat(1) / det2(p.g);

    RingMatrix bblk(2);
    bblk.at(0, 0) = Laurent::term(a * inv_det, Rat(1));
    bblk.at(0, 1) = Laurent(-(b * inv_det));
    bblk.at(1, 0) = Laurent::term(c * inv_det, Rat(1));
    bblk.at(1, 1) = Laurent(-(d * inv_det));

    RingMatrix m(4);
    put_block(m, 0, 2, bblk);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            m.at(i + 2, j) = Laurent(p.g.at(i, j));
            m.at(i + 2, j + 2) = bblk.at(i, j) * Laurent(p.mu);
        }
    return m;
}

bool verify_congruence(const RingMatrix& m) {
    if (m.n() != 4) throw DimensionMismatch("verify_congruence: expected a 4x4 matrix");
    return m.transpose().mul(form_matrix_det()).mul(m) == form_matrix_q();
}

RingMatrix apply_converter(const RingMatrix& m, const ExponentMatrix& x) {
    if (m.n() != 4 || x.n() != 2) throw DimensionMismatch("apply_converter: bad shapes");
    const Rat w[4] = {x.at(0, 0), x.at(0, 1), x.at(1, 0), x.at(1, 1)};
    RingMatrix out(2);
    for (std::size_t r = 0; r < 4; ++r) {
        Laurent acc;
        for (std::size_t c = 0; c < 4; ++c) acc += m.at(r, c) * Laurent(w[c]);
        out.at(r / 2, r % 2) = acc;
    }
    return out;
}

bool verify_conversion_identity(const RingMatrix& m, int trials, Sampler& sampler) {
    for (int t = 0; t < trials; ++t) {
        const ExponentMatrix x = sampler.rational_matrix(2, 20, 10);
        const Laurent pq = Laurent(x.at(0, 0) * x.at(1, 1)) +
                           Laurent::q() * Laurent(x.at(0, 1) * x.at(1, 0));
        const RingMatrix img = apply_converter(m, x);
        if (pq != det2_laurent(img, 0, 0)) return false;
    }
    return true;
}

namespace {

// Extracts the constant rational 2x2 block at (r0, c0); nullopt if any entry
// is not a constant.
std::optional<ExponentMatrix> constant_block(const RingMatrix& m, std::size_t r0,
                                             std::size_t c0) {
    ExponentMatrix g(2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            if (!m.at(r0 + i, c0 + j).is_constant()) return std::nullopt;
            g.at(i, j) = m.at(r0 + i, c0 + j).constant_value();
        }
    return g;
}

bool block_is_zero(const RingMatrix& m, std::size_t r0, std::size_t c0) {
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            if (!m.at(r0 + i, c0 + j).is_zero()) return false;
    return true;
}

// First nonzero of g in row-major order.
std::pair<std::size_t, std::size_t> first_nonzero(const ExponentMatrix& g) {
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            if (!g.at(i, j).is_zero()) return {i, j};
    throw Error("classify: zero block where a nonzero one is required");
}

} // namespace

Classification classify(const RingMatrix& m) {
    if (!verify_congruence(m)) return NotAConverter{};

    const Laurent det_a = det2_laurent(m, 0, 0);
    const bool a_zero = block_is_zero(m, 0, 0);

    if (!det_a.is_zero()) {
        const auto g_opt = constant_block(m, 0, 0);
        if (!g_opt) return NotAConverter{};
        const ExponentMatrix g = *g_opt;
        const Rat dg = det2(g);
        const auto [pi, pj] = first_nonzero(g);
        const Laurent inv_q = Laurent::q_power(Rat(-1));

        // C = alpha G
        const Laurent alpha_l =
            Laurent::exact_div(m.at(2 + pi, pj), Laurent(g.at(pi, pj)));
        if (!alpha_l.is_constant()) return NotAConverter{};
        const Rat alpha = alpha_l.constant_value();
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                if (m.at(2 + i, j) != Laurent(alpha * g.at(i, j))) return NotAConverter{};

        // B = beta G diag(-1, 1/q)
        Laurent beta_l = (pj == 0) ? -m.at(pi, 2) : m.at(pi, 3) * Laurent::q();
        beta_l = Laurent::exact_div(beta_l, Laurent(g.at(pi, pj)));
        if (!beta_l.is_constant()) return NotAConverter{};
        const Rat beta = beta_l.constant_value();
        for (std::size_t i = 0; i < 2; ++i) {
            if (m.at(i, 2) != Laurent(-(beta * g.at(i, 0)))) return NotAConverter{};
            if (m.at(i, 3) != Laurent(beta * g.at(i, 1)) * inv_q) return NotAConverter{};
        }

        // D = gamma G diag(1, -1/q), and alpha beta + gamma = -q / det(G).
        const Laurent gamma = (pj == 0)
                                  ? Laurent::exact_div(m.at(2 + pi, 2), Laurent(g.at(pi, pj)))
                                  : Laurent::exact_div(-(m.at(2 + pi, 3) * Laurent::q()),
                                                       Laurent(g.at(pi, pj)));
        for (std::size_t i = 0; i < 2; ++i) {
            if (m.at(2 + i, 2) != gamma * Laurent(g.at(i, 0))) return NotAConverter{};
            if (m.at(2 + i, 3) != -(gamma * Laurent(g.at(i, 1)) * inv_q)) return NotAConverter{};
        }
        if (Laurent(alpha * beta) + gamma != Laurent::term(-(Rat(1) / dg), Rat(1)))
            return NotAConverter{};
        return ClassifiedFamilyI{g, alpha, beta, gamma};
    }

    if (a_zero) {
        const auto g_opt = constant_block(m, 2, 0);
        if (!g_opt) return NotAConverter{};
        const ExponentMatrix g = *g_opt;
        const Rat dg = det2(g);
        if (dg.is_zero()) return NotAConverter{};
        const Rat inv_det = Rat(1) / dg;

        RingMatrix expected_b(2);
        expected_b.at(0, 0) = Laurent::term(g.at(0, 0) * inv_det, Rat(1));
        expected_b.at(0, 1) = Laurent(-(g.at(0, 1) * inv_det));
        expected_b.at(1, 0) = Laurent::term(g.at(1, 0) * inv_det, Rat(1));
        expected_b.at(1, 1) = Laurent(-(g.at(1, 1) * inv_det));
        if (block_of(m, 0, 2) != expected_b) return NotAConverter{};

        Rat mu(0);
        if (!block_is_zero(m, 2, 2)) {
            std::size_t bi = 0, bj = 0;
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j)
                    if (!expected_b.at(i, j).is_zero()) { bi = i; bj = j; }
            const Laurent mu_l = Laurent::exact_div(m.at(2 + bi, 2 + bj), expected_b.at(bi, bj));
            if (!mu_l.is_constant()) return NotAConverter{};
            mu = mu_l.constant_value();
        }
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                if (m.at(2 + i, 2 + j) != expected_b.at(i, j) * Laurent(mu))
                    return NotAConverter{};
        return ClassifiedFamilyII{g, mu};
    }

    throw RankOneParadox(
        "classify: congruence holds with a singular nonzero leading block");
}

} // namespace qperm
