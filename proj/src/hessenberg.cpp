#include "qperm/hessenberg.hpp"

#include "qperm/errors.hpp"
#include "qperm/linalg.hpp"

namespace qperm {

ExponentMatrix h0(std::size_t n) {
    ExponentMatrix m(n);
    for (std::size_t i = 0; i + 1 < n; ++i) m.at(i, i + 1) = Rat(1);
    return m;
}

std::optional<std::pair<int, int>> hessenberg_violation(const RingMatrix& a) {
    for (std::size_t i = 0; i < a.n(); ++i)
        for (std::size_t j = i + 2; j < a.n(); ++j)
            if (!a.at(i, j).is_zero())
                return std::make_pair(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
    return std::nullopt;
}

namespace {

void require_hessenberg(const RingMatrix& a) {
    if (auto bad = hessenberg_violation(a))
        throw NotHessenberg("entry (" + std::to_string(bad->first) + "," +
                            std::to_string(bad->second) + ") violates the Hessenberg pattern");
}

// Applies the (-q)^{H0} Schur weight to an already-substituted rational
// Hessenberg matrix: the superdiagonal picks up a factor -q0.
ExponentMatrix signed_weight_at(const ExponentMatrix& a, const Rat& q0) {
    ExponentMatrix b = a;
    for (std::size_t i = 0; i + 1 < b.n(); ++i) b.at(i, i + 1) *= -q0;
    return b;
}

} // namespace

QPermResult qperm_hessenberg_fast(const RingMatrix& a) {
    require_hessenberg(a);
    const RingMatrix weighted = schur_apply(h0(a.n()), a, -1);
    QPermResult r;
    r.value = det_bareiss(weighted);
    r.method = EvalMethod::HessenbergDet;
    r.term_count = a.n() == 0 ? 1 : (1ull << (a.n() - 1));
    return r;
}

Rat qperm_hessenberg_at(const RingMatrix& a, const Rat& q0) {
    if (q0.is_zero()) throw ZeroQ("qperm_hessenberg_at: q0 must be nonzero");
    require_hessenberg(a);
    return qperm_hessenberg_at(a.substitute(q0), q0);
}

Rat qperm_hessenberg_at(const ExponentMatrix& a, const Rat& q0) {
    if (q0.is_zero()) throw ZeroQ("qperm_hessenberg_at: q0 must be nonzero");
    for (std::size_t i = 0; i < a.n(); ++i)
        for (std::size_t j = i + 2; j < a.n(); ++j)
            if (!a.at(i, j).is_zero())
                throw NotHessenberg("entry (" + std::to_string(i + 1) + "," +
                                    std::to_string(j + 1) + ") violates the Hessenberg pattern");
    return det_rational_scaled(signed_weight_at(a, q0));
}

Rat qperm_hessenberg_recurrence_at(const ExponentMatrix& a, const Rat& q0) {
    if (q0.is_zero()) throw ZeroQ("qperm_hessenberg_recurrence_at: q0 must be nonzero");
    return det_hessenberg_recurrence(signed_weight_at(a, q0));
}

HessenbergExponent hessenberg_membership(const ExponentMatrix& h, const QSpec& q_spec) {
    const int n = static_cast<int>(h.n());
    if (n > 6) throw SizeTooLarge("hessenberg_membership: n > 6");
    HessenbergExponent out;
    out.h = h;

    bool plus = true;
    bool minus = true;
    for (const Perm& s : hessenberg_compatible(n)) {
        const Rat gap = h.sigma_trace(s) - Rat(s.ell());
        if (std::holds_alternative<GenericModulus>(q_spec)) {
            if (!gap.is_zero()) {
                plus = minus = false;
                break;
            }
        } else {
            const Rat theta = std::get<RootOfUnityTheta>(q_spec).theta;
            if (!(theta > Rat(0) && theta < Rat(1)) || theta == Rat(1, 2))
                throw Error("hessenberg_membership: theta must lie in (0,1) and differ from 1/2");
            if (!(theta * gap).is_integer()) {
                plus = minus = false;
                break;
            }
            // Determinant identity additionally needs an even integer gap.
            if (!gap.is_integer() || mpz_odd_p(gap.num().get_mpz_t())) minus = false;
        }
    }
    out.classification =
        !plus ? HessClass::Neither : (minus ? HessClass::PlusAndMinus : HessClass::PlusOnly);
    return out;
}

ExponentMatrix hessenberg_family3(const Rat& a, const Rat& b, const Rat& c, const Rat& d,
                                  const Rat& h13, const std::array<long, 4>& k, const Rat& theta) {
    if (!(theta > Rat(0) && theta < Rat(1)) || theta == Rat(1, 2))
        throw Error("hessenberg_family3: theta must lie in (0,1) and differ from 1/2");
    // k is indexed by the lex order of S_3^*: id, (23), (12), (123).
    const Rat k_id = Rat(k[0]) / theta;
    const Rat k_23 = Rat(k[1]) / theta;
    const Rat k_12 = Rat(k[2]) / theta;
    const Rat k_123 = Rat(k[3]) / theta;

    ExponentMatrix m(3);
    m.at(0, 0) = a;
    m.at(0, 1) = b;
    m.at(0, 2) = h13;
    m.at(1, 0) = k_12 + Rat(1) - b - d;
    m.at(1, 1) = k_id - a - d;
    m.at(1, 2) = c;
    m.at(2, 0) = k_123 + Rat(2) - b - c;
    m.at(2, 1) = k_23 + Rat(1) - a - c;
    m.at(2, 2) = d;
    return m;
}

LatticeConstraints lattice_constraints(int n) {
    if (n < 1) throw Error("lattice_constraints: n must be positive");
    if (n > 7) throw SizeTooLarge("lattice_constraints: n > 7");
    LatticeConstraints out;
    out.n = n;
    out.order = hessenberg_compatible(n);

    // Columns are the Hessenberg support positions (j <= i+1), row-major.
    std::vector<std::pair<int, int>> support;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= std::min(n, i + 1); ++j) support.emplace_back(i, j);

    RatMatrix trace_map(out.order.size(), support.size());
    for (std::size_t r = 0; r < out.order.size(); ++r) {
        const Perm& s = out.order[r];
        for (std::size_t c = 0; c < support.size(); ++c)
            if (s(support[c].first) == support[c].second) trace_map.at(r, c) = Rat(1);
    }
    out.relations = left_nullspace(trace_map);
    out.surjective = out.relations.empty();
    return out;
}

} // namespace qperm
