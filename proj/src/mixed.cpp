#include "qperm/mixed.hpp"

#include <algorithm>
#include <thread>

#include "qperm/errors.hpp"
#include "qperm/evaluator.hpp"
#include "qperm/linalg.hpp"

namespace qperm {

TargetVector TargetVector::from_b(int n, std::vector<long> bv) {
    const std::vector<Perm> group = symmetric_group(n);
    if (bv.size() != group.size())
        throw DimensionMismatch("TargetVector: expected one entry per permutation");
    TargetVector t;
    t.n = n;
    t.b = std::move(bv);
    t.delta.resize(t.b.size());
    for (std::size_t i = 0; i < t.b.size(); ++i) {
        const long d = group[i].ell() - t.b[i];
        if (d != 0 && d != 1)
            throw Error("TargetVector: component " + std::to_string(i) +
                        " is not in {ell-1, ell}");
        t.delta[i] = static_cast<int>(d);
    }
    return t;
}

namespace {

std::vector<std::vector<long>> nullspace_columns(int n, std::size_t& nullity) {
    const IncidenceMatrix inc = incidence_matrix(n);
    const auto basis = left_nullspace(inc.mat);
    nullity = basis.size();
    // Column-major: for each permutation index, the nullspace coefficients.
    std::vector<std::vector<long>> cols(inc.order.size(), std::vector<long>(nullity, 0));
    for (std::size_t j = 0; j < nullity; ++j)
        for (std::size_t s = 0; s < inc.order.size(); ++s) {
            if (!basis[j][s].fits_slong_p())
                throw Error("search_consistent_targets: nullspace entry out of range");
            cols[s][j] = basis[j][s].get_si();
        }
    return cols;
}

void gray_scan(std::uint64_t begin, std::uint64_t end, const std::vector<std::vector<long>>& cols,
               const std::vector<long>& ell_residual, std::size_t nullity,
               std::vector<std::uint64_t>& hits) {
    // Residual r = N^T b with b = ell - delta for delta = gray(begin).
    std::vector<long> r = ell_residual;
    const std::uint64_t d0 = begin ^ (begin >> 1);
    std::size_t nonzero = 0;
    for (std::size_t j = 0; j < nullity; ++j) {
        long acc = r[j];
        for (std::size_t s = 0; s < cols.size(); ++s)
            if (d0 >> s & 1ULL) acc -= cols[s][j];
        r[j] = acc;
        if (acc != 0) ++nonzero;
    }
    std::uint64_t delta = d0;
    for (std::uint64_t idx = begin;; ++idx) {
        if (nonzero == 0) hits.push_back(delta);
        if (idx + 1 >= end) break;
        const unsigned bit = static_cast<unsigned>(__builtin_ctzll(idx + 1));
        const bool setting = !(delta >> bit & 1ULL);
        delta ^= 1ULL << bit;
        const std::vector<long>& col = cols[bit];
        for (std::size_t j = 0; j < nullity; ++j) {
            if (col[j] == 0) continue;
            const long before = r[j];
            const long after = setting ? before - col[j] : before + col[j];
            r[j] = after;
            if (before == 0 && after != 0) ++nonzero;
            if (before != 0 && after == 0) --nonzero;
        }
    }
}

} // namespace

std::vector<TargetVector> search_consistent_targets(int n, int jobs) {
    if (n < 2) throw Error("search_consistent_targets: n must be at least 2");
    if (n > 4)
        throw SizeTooLarge("search_consistent_targets: n >= 5 has no solutions "
                           "(see obstruction_n5)");
    if (jobs < 1) jobs = 1;

    const std::vector<Perm> group = symmetric_group(n);
    const std::size_t fact = group.size();
    std::size_t nullity = 0;
    const auto cols = nullspace_columns(n, nullity);

    std::vector<long> ell_residual(nullity, 0);
    for (std::size_t j = 0; j < nullity; ++j)
        for (std::size_t s = 0; s < fact; ++s) ell_residual[j] += cols[s][j] * group[s].ell();

    const std::uint64_t total = 1ULL << fact;
    const int workers = std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs), total);
    std::vector<std::vector<std::uint64_t>> hits(static_cast<std::size_t>(workers));

    if (workers == 1) {
        gray_scan(0, total, cols, ell_residual, nullity, hits[0]);
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t chunk = total / static_cast<std::uint64_t>(workers);
        for (int w = 0; w < workers; ++w) {
            const std::uint64_t b = static_cast<std::uint64_t>(w) * chunk;
            const std::uint64_t e = (w + 1 == workers) ? total : b + chunk;
            pool.emplace_back([&, b, e, w] {
                gray_scan(b, e, cols, ell_residual, nullity, hits[static_cast<std::size_t>(w)]);
            });
        }
        for (auto& t : pool) t.join();
    }

    std::vector<TargetVector> out;
    for (const auto& part : hits)
        for (std::uint64_t delta : part) {
            std::vector<long> b(fact);
            for (std::size_t s = 0; s < fact; ++s)
                b[s] = group[s].ell() - static_cast<long>(delta >> s & 1ULL);
            out.push_back(TargetVector::from_b(n, std::move(b)));
        }
    std::sort(out.begin(), out.end(),
              [](const TargetVector& x, const TargetVector& y) { return x.b < y.b; });
    return out;
}

bool target_consistent_oracle(int n, const std::vector<long>& b) {
    const IncidenceMatrix inc = incidence_matrix(n);
    if (b.size() != inc.order.size())
        throw DimensionMismatch("target_consistent_oracle: wrong length");
    std::vector<Rat> rhs(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) rhs[i] = Rat(b[i]);
    return solve_linear(inc.mat, rhs).consistent;
}

MixedComponent recover_base_matrix(const TargetVector& target) {
    const IncidenceMatrix inc = incidence_matrix(target.n);
    std::vector<Rat> rhs(target.b.size());
    for (std::size_t i = 0; i < target.b.size(); ++i) rhs[i] = Rat(target.b[i]);
    const LinearSolve s = solve_linear(inc.mat, rhs);
    if (!s.consistent)
        throw InconsistentTarget("recover_base_matrix: target not in the column space");

    MixedComponent comp;
    comp.target = target;
    const std::size_t un = static_cast<std::size_t>(target.n);
    const ExponentMatrix rational = ExponentMatrix::from_vec(un, s.particular);
    if (auto integral = integerize_in_coset(rational)) {
        comp.m0 = *integral;
        comp.integral = true;
    } else {
        comp.m0 = rational;
        comp.integral = false;
    }
    comp.kernel = preserver_basis(target.n).matrices;
    return comp;
}

bool verify_mixed_identity(const ExponentMatrix& m, int trials, Sampler& sampler) {
    if (!m.is_integer())
        throw NonIntegerExponent("verify_mixed_identity: exponent matrix must be integral");
    if (m.n() > 4) throw SizeTooLarge("verify_mixed_identity: n > 4");
    const Laurent half(Rat(1, 2));
    const Laurent plus_coef = half + half * Laurent::q();   // (1+q)/2
    const Laurent minus_coef = half - half * Laurent::q();  // (1-q)/2
    for (int t = 0; t < trials; ++t) {
        const RingMatrix a = sampler.constant_matrix(m.n());
        const Laurent lhs = qperm_naive(a);
        const RingMatrix ap = schur_apply(m, a, +1);
        const RingMatrix am = schur_apply(m, a, -1);
        const Laurent rhs = plus_coef * permanent(ap) + minus_coef * det_bareiss(am);
        if (lhs != rhs) return false;
    }
    return true;
}

ObstructionN5 obstruction_n5() {
    ObstructionN5 r;
    const DihedralGroup d5 = dihedral_group(5);
    ExponentMatrix rot_sum(5), ref_sum(5);
    for (const Perm& p : d5.rotations) {
        r.rotation_ell_sum += p.ell();
        rot_sum += ExponentMatrix::permutation(p);
    }
    for (const Perm& p : d5.reflections) {
        r.reflection_ell_sum += p.ell();
        ref_sum += ExponentMatrix::permutation(p);
    }
    r.matrix_sums_equal =
        rot_sum == ExponentMatrix::ones(5) && ref_sum == ExponentMatrix::ones(5);
    r.required_alternating_sum = r.rotation_ell_sum - r.reflection_ell_sum;
    // sum over rotations of delta minus sum over reflections, delta in {0,1}
    r.min_feasible = -static_cast<long>(d5.reflections.size());
    r.max_feasible = static_cast<long>(d5.rotations.size());
    r.impossible = r.required_alternating_sum < r.min_feasible ||
                   r.required_alternating_sum > r.max_feasible;
    return r;
}

namespace {

ExponentMatrix sign_matrix(const ExponentMatrix& m0) {
    ExponentMatrix s(m0.n());
    for (std::size_t i = 0; i < m0.n(); ++i)
        for (std::size_t j = 0; j < m0.n(); ++j)
            s.at(i, j) = mpz_odd_p(m0.at(i, j).num().get_mpz_t()) ? Rat(-1) : Rat(1);
    return s;
}

} // namespace

SignMatrixReport sign_matrix_invariants(const MixedComponent& comp) {
    if (!comp.m0.is_integer())
        throw NonIntegerExponent("sign_matrix_invariants: base matrix must be integral");
    const ExponentMatrix s = sign_matrix(comp.m0);
    SignMatrixReport r;
    r.det = det_rational_scaled(s).to_long();
    r.per = permanent_substituted(s).to_long();
    Rat tr(0);
    for (std::size_t i = 0; i < s.n(); ++i) tr += s.at(i, i);
    r.trace = tr.to_long();

    const std::vector<Perm> group = symmetric_group(comp.target.n);
    long delta_sum = 0, signed_delta_sum = 0, fact = 1;
    for (long k = 2; k <= comp.target.n; ++k) fact *= k;
    for (std::size_t i = 0; i < group.size(); ++i) {
        delta_sum += comp.target.delta[i];
        signed_delta_sum += group[i].sign() * comp.target.delta[i];
    }
    r.det_formula_holds = (r.det == fact - 2 * delta_sum);
    r.per_formula_holds = (r.per == -2 * signed_delta_sum);
    return r;
}

bool derivative_identity_check(const MixedComponent& comp, int eps, int trials,
                               Sampler& sampler) {
    if (eps != 1 && eps != -1) throw Error("derivative_identity_check: eps must be +-1");
    if (comp.target.n > 4) throw SizeTooLarge("derivative_identity_check: n > 4");
    const std::vector<Perm> group = symmetric_group(comp.target.n);
    const ExponentMatrix s = sign_matrix(comp.m0);
    const std::size_t un = static_cast<std::size_t>(comp.target.n);

    for (int t = 0; t < trials; ++t) {
        const ExponentMatrix a = sampler.rational_matrix(un);
        Rat lhs(0);
        for (std::size_t i = 0; i < group.size(); ++i) {
            if (comp.target.delta[i] == 0) continue;
            Rat wt(1);
            for (std::size_t row = 0; row < un; ++row)
                wt *= a.at(row, static_cast<std::size_t>(group[i](static_cast<int>(row) + 1) - 1));
            lhs += Rat(eps).pow(group[i].ell()) * wt;
        }
        ExponentMatrix flipped(un);
        for (std::size_t i = 0; i < un; ++i)
            for (std::size_t j = 0; j < un; ++j) flipped.at(i, j) = s.at(i, j) * a.at(i, j);
        const Rat rhs =
            (qperm_substituted(a, Rat(eps)) - qperm_substituted(flipped, Rat(-eps))) / Rat(2);
        if (lhs != rhs) return false;
    }
    return true;
}

ZeroLocusReport zero_locus_check(const RingMatrix& a, const Rat& q0,
                                 const MixedComponent& comp) {
    if (q0.is_zero()) throw ZeroQ("zero_locus_check: q0 must be nonzero");
    if (q0.abs().is_one()) throw QAtSingularity("zero_locus_check: q0 must avoid -1 and 1");
    if (a.n() > 4) throw SizeTooLarge("zero_locus_check: n > 4");
    if (a.n() != comp.m0.n()) throw DimensionMismatch("zero_locus_check: size mismatch");
    if (!comp.m0.is_integer())
        throw NonIntegerExponent("zero_locus_check: base matrix must be integral");

    const std::size_t un = a.n();
    const ExponentMatrix aq = a.substitute(q0);
    ZeroLocusReport r;
    r.p_is_zero = qperm_substituted(aq, q0).is_zero();

    // A+ = q0^M o A, W = (-1)^M with one row scaled by (q0-1)/(q0+1).
    ExponentMatrix aplus(un);
    for (std::size_t i = 0; i < un; ++i)
        for (std::size_t j = 0; j < un; ++j)
            aplus.at(i, j) = q0.pow(comp.m0.at(i, j).to_long()) * aq.at(i, j);
    const ExponentMatrix s = sign_matrix(comp.m0);
    const Rat row_factor = (q0 - Rat(1)) / (q0 + Rat(1));

    auto det_with_scaled_row = [&](std::size_t row) {
        ExponentMatrix w(un);
        for (std::size_t i = 0; i < un; ++i)
            for (std::size_t j = 0; j < un; ++j) {
                Rat entry = s.at(i, j) * aplus.at(i, j);
                if (i == row) entry *= row_factor;
                w.at(i, j) = entry;
            }
        return det_rational_scaled(w);
    };

    const Rat det_first = det_with_scaled_row(0);
    const Rat det_last = det_with_scaled_row(un - 1);
    r.row_choice_invariant = (det_first == det_last);
    const bool conversion_holds = (permanent_substituted(aplus) == det_first);
    r.biconditional_holds = (r.p_is_zero == conversion_holds);
    return r;
}

} // namespace qperm
