#include "qperm/preservers.hpp"

#include "qperm/errors.hpp"
#include "qperm/evaluator.hpp"

namespace qperm {

PreserverBasis preserver_basis(int n) {
    if (n < 2) throw Error("preserver_basis: requires n >= 2");
    PreserverBasis b;
    b.n = n;
    const std::size_t un = static_cast<std::size_t>(n);
    for (std::size_t i = 0; i < un; ++i) {
        ExponentMatrix r(un);
        for (std::size_t a = 0; a < un; ++a)
            for (std::size_t col = 0; col < un; ++col) {
                if (col == i && a != un - 1) r.at(a, col) = Rat(1);
                if (a == un - 1 && col != i) r.at(a, col) = Rat(-1);
            }
        b.matrices.push_back(std::move(r));
    }
    for (std::size_t j = 1; j + 1 < un; ++j) {
        ExponentMatrix s(un);
        for (std::size_t col = 0; col < un; ++col) {
            s.at(j, col) = Rat(1);
            s.at(un - 1, col) = Rat(-1);
        }
        b.matrices.push_back(std::move(s));
    }
    return b;
}

bool is_preserver(const ExponentMatrix& r) {
    const int n = static_cast<int>(r.n());
    if (n > 6) throw SizeTooLarge("is_preserver: n > 6");
    for (const Perm& s : symmetric_group(n))
        if (!r.sigma_trace(s).is_zero()) return false;
    return true;
}

std::variant<UVDecomposition, MongeViolation> uv_decompose(const ExponentMatrix& r) {
    const std::size_t n = r.n();
    for (std::size_t i1 = 0; i1 < n; ++i1)
        for (std::size_t i2 = i1 + 1; i2 < n; ++i2)
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = a + 1; b < n; ++b)
                    if (r.at(i1, a) + r.at(i2, b) != r.at(i1, b) + r.at(i2, a))
                        return MongeViolation{static_cast<int>(i1) + 1, static_cast<int>(i2) + 1,
                                              static_cast<int>(a) + 1, static_cast<int>(b) + 1};

    UVDecomposition d;
    d.u.resize(n);
    d.v.resize(n);
    for (std::size_t i = 0; i < n; ++i) d.u[i] = r.at(i, 0);
    for (std::size_t j = 0; j < n; ++j) d.v[j] = r.at(0, j) - r.at(0, 0);
    // Gauge shift u -> u - c, v -> v + c so that sum(u) = sum(v); on
    // trace-zero input this forces both sums to vanish.
    Rat su(0), sv(0);
    for (const Rat& x : d.u) su += x;
    for (const Rat& x : d.v) sv += x;
    const Rat c = (su - sv) / Rat(2 * static_cast<long>(n));
    for (Rat& x : d.u) x -= c;
    for (Rat& x : d.v) x += c;
    return d;
}

bool verify_preserver_action(const ExponentMatrix& r, int trials, Sampler& sampler) {
    const int n = static_cast<int>(r.n());
    if (n > 6) throw SizeTooLarge("verify_preserver_action: n > 6");
    const std::vector<Rat> entries = r.vec();
    const mpz_class d = denominator_lcm(entries.begin(), entries.end());
    if (!d.fits_slong_p()) throw Error("verify_preserver_action: exponent denominators too large");
    const long dl = d.get_si();

    for (int t = 0; t < trials; ++t) {
        const RingMatrix a = sampler.constant_matrix(static_cast<std::size_t>(n));
        const Rat w = sampler.generic_scalar();
        const Laurent plain = qperm_naive(a);
        const Laurent weighted = qperm_term_scaled(a, [&](const Perm& nu) {
            const Rat e = r.sigma_trace(nu) * Rat(dl);
            return w.pow(e.to_long());
        });
        if (plain != weighted) return false;
    }
    return true;
}

ExponentMatrix ternary_product(const ExponentMatrix& a, const ExponentMatrix& b,
                               const ExponentMatrix& c) {
    if (!is_preserver(a) || !is_preserver(b) || !is_preserver(c))
        throw NotAPreserver("ternary_product: inputs must be preserver exponents");
    ExponentMatrix out = a.mul(b).mul(c) + c.mul(b).mul(a);
    if (!is_preserver(out))
        throw Error("ternary_product: closure violated (this should be impossible)");
    return out;
}

std::variant<SheetInconsistent, AffineSolutionSpace> sheet_solve(const SheetSpec& spec) {
    if (spec.n < 2) throw Error("sheet_solve: n must be at least 2");
    if (spec.n > 5) throw SizeTooLarge("sheet_solve: n > 5");
    if (!(spec.theta > Rat(0) && spec.theta < Rat(1)) || spec.theta == Rat(1, 2))
        throw Error("sheet_solve: theta must lie in (0,1) and differ from 1/2");

    const IncidenceMatrix inc = incidence_matrix(spec.n);
    if (spec.k.size() != inc.order.size())
        throw DimensionMismatch("sheet_solve: k must have one entry per permutation");

    std::vector<Rat> rhs(spec.k.size());
    for (std::size_t i = 0; i < spec.k.size(); ++i) rhs[i] = Rat(spec.k[i]) / spec.theta;

    const LinearSolve s = solve_linear(inc.mat, rhs);
    if (!s.consistent) return SheetInconsistent{};

    AffineSolutionSpace out;
    const std::size_t un = static_cast<std::size_t>(spec.n);
    out.particular = ExponentMatrix::from_vec(un, s.particular);
    for (const auto& v : s.kernel) out.kernel.push_back(ExponentMatrix::from_vec(un, v));
    return out;
}

} // namespace qperm
