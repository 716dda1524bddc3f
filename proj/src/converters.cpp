#include "qperm/converters.hpp"

#include <algorithm>
#include <map>

#include "qperm/errors.hpp"
#include "qperm/evaluator.hpp"
#include "qperm/reference_data.hpp"

namespace qperm {

namespace {

long alternating_ell(const std::array<Perm, 4>& q) {
    return q[0].ell() - q[1].ell() - q[2].ell() + q[3].ell();
}

long alternating_ell_after(const Perm& tau, const std::array<Perm, 4>& q) {
    long acc = 0;
    const long sgn[4] = {1, -1, -1, 1};
    for (int k = 0; k < 4; ++k) acc += sgn[k] * (tau * q[static_cast<std::size_t>(k)]).ell();
    return acc;
}

/*
 * Exhaustive search over S_4 quadruples for a balanced quadruple with
 * alternating ell sum zero and alternating ell-after-p sum exactly 2.
 * Given p1, p2, p4, the balance condition pins p3(i) = p1(i)+p4(i)-p2(i).
 */
std::optional<ObstructionCertificate> search_pattern_quadruple(const Perm& p) {
    const std::vector<Perm> s4 = symmetric_group(4);
    for (const Perm& p1 : s4)
        for (const Perm& p2 : s4)
            for (const Perm& p4 : s4) {
                std::vector<int> img(4);
                bool feasible = true;
                for (int i = 1; i <= 4 && feasible; ++i) {
                    const int a = p1(i), b = p2(i), dd = p4(i);
                    if (b != a && b != dd) feasible = false;
                    const int cc = a + dd - b;
                    if (cc < 1 || cc > 4) feasible = false;
                    if (feasible) img[static_cast<std::size_t>(i - 1)] = cc;
                }
                if (!feasible) continue;
                std::vector<char> seen(4, 0);
                for (int v : img) {
                    if (seen[static_cast<std::size_t>(v - 1)]) feasible = false;
                    seen[static_cast<std::size_t>(v - 1)] = 1;
                }
                if (!feasible) continue;
                std::array<Perm, 4> quad{p1, p2, Perm(img), p4};
                if (!is_balanced(quad)) continue;
                if (alternating_ell(quad) != 0) continue;
                const long gap = alternating_ell_after(p, quad);
                if (gap == 2) return ObstructionCertificate{quad, gap};
            }
    return std::nullopt;
}

std::map<std::vector<int>, ObstructionCertificate> build_pattern_table() {
    std::map<std::vector<int>, ObstructionCertificate> table;
    // Documented witness for the pattern (12).
    {
        std::array<Perm, 4> quad{Perm({1, 2, 4, 3}), Perm({4, 2, 1, 3}), Perm({1, 3, 4, 2}),
                                 Perm({4, 3, 1, 2})};
        table[{2, 1, 3, 4}] = ObstructionCertificate{quad, 2};
    }
    for (const Perm& p : symmetric_group(4)) {
        if (in_dihedral(p) || table.count(p.one_line())) continue;
        auto found = search_pattern_quadruple(p);
        if (!found)
            throw Error("obstruction_pattern: no witness for pattern " + p.cycles());
        table[p.one_line()] = *found;
    }
    return table;
}

} // namespace

const ObstructionCertificate& obstruction_pattern(const Perm& p) {
    static const std::map<std::vector<int>, ObstructionCertificate> table = build_pattern_table();
    auto it = table.find(p.one_line());
    if (it == table.end())
        throw Error("obstruction_pattern: " + p.cycles() + " is dihedral or not in S_4");
    return it->second;
}

bool certificate_valid(const Perm& tau, const ObstructionCertificate& cert) {
    if (!is_balanced(cert.quadruple)) return false;
    if (alternating_ell(cert.quadruple) != 0) return false;
    return alternating_ell_after(tau, cert.quadruple) == cert.gap && cert.gap != 0;
}

namespace {

ObstructionCertificate build_certificate(int n, const Perm& tau) {
    // Lex-lowest 4-subset whose pattern leaves D_4; one exists whenever the
    // trace system is unsolvable.
    std::array<int, 4> idx{};
    for (int a = 1; a <= n - 3; ++a)
        for (int b = a + 1; b <= n - 2; ++b)
            for (int c = b + 1; c <= n - 1; ++c)
                for (int d = c + 1; d <= n; ++d) {
                    idx = {a, b, c, d};
                    const Perm p = standardize(tau, idx);
                    if (in_dihedral(p)) continue;
                    const ObstructionCertificate& base = obstruction_pattern(p);
                    ObstructionCertificate lifted;
                    for (int k = 0; k < 4; ++k)
                        lifted.quadruple[static_cast<std::size_t>(k)] =
                            embed_pattern(base.quadruple[static_cast<std::size_t>(k)], idx, n);
                    lifted.gap = alternating_ell_after(tau, lifted.quadruple);
                    if (!certificate_valid(tau, lifted))
                        throw Error("solve_tau: lifted certificate failed validation");
                    return lifted;
                }
    throw Error("solve_tau: system unsolvable but every 4-pattern is dihedral");
}

} // namespace

TauSolveResult solve_tau(int n, const Perm& tau) {
    if (n > 6) throw SizeTooLarge("solve_tau: n > 6");
    if (tau.size() != n) throw DimensionMismatch("solve_tau: tau has wrong size");
    const std::vector<Perm> group = symmetric_group(n);
    const std::size_t un = static_cast<std::size_t>(n);
    const std::size_t cols = un * un + 1;  // vec(L) then x

    RatMatrix a(group.size(), cols);
    std::vector<Rat> rhs(group.size());
    for (std::size_t r = 0; r < group.size(); ++r) {
        const Perm& nu = group[r];
        for (std::size_t i = 0; i < un; ++i)
            a.at(r, i * un + static_cast<std::size_t>(nu(static_cast<int>(i) + 1) - 1)) = Rat(1);
        a.at(r, cols - 1) = Rat(nu.ell());
        rhs[r] = Rat((tau * nu).ell());
    }

    LinearSolve s = solve_linear(a, rhs);
    if (!s.consistent) return build_certificate(n, tau);

    bool x_free = false;
    for (const auto& v : s.kernel)
        if (!v[cols - 1].is_zero()) x_free = true;

    TauConverter out;
    out.n = n;
    out.tau = tau;
    if (!x_free) {
        out.x = s.particular[cols - 1];
        std::vector<Rat> lvec(s.particular.begin(), s.particular.end() - 1);
        out.space.particular = ExponentMatrix::from_vec(un, lvec);
        for (const auto& v : s.kernel) {
            std::vector<Rat> kv(v.begin(), v.end() - 1);
            out.space.kernel.push_back(ExponentMatrix::from_vec(un, kv));
        }
        return out;
    }

    // x undetermined (n = 2): pin it to sgn(tau) and solve the matrix part.
    out.x = Rat(tau.sign());
    RatMatrix a2(group.size(), un * un);
    std::vector<Rat> rhs2(group.size());
    for (std::size_t r = 0; r < group.size(); ++r) {
        const Perm& nu = group[r];
        for (std::size_t i = 0; i < un; ++i)
            a2.at(r, i * un + static_cast<std::size_t>(nu(static_cast<int>(i) + 1) - 1)) = Rat(1);
        rhs2[r] = Rat((tau * nu).ell()) - out.x * Rat(nu.ell());
    }
    LinearSolve s2 = solve_linear(a2, rhs2);
    if (!s2.consistent) throw Error("solve_tau: re-solve with pinned x failed unexpectedly");
    out.space.particular = ExponentMatrix::from_vec(un, s2.particular);
    for (const auto& v : s2.kernel) out.space.kernel.push_back(ExponentMatrix::from_vec(un, v));
    return out;
}

bool verify_converter(const Perm& tau, const ExponentMatrix& l, const Rat& x, int trials,
                      Sampler& sampler) {
    if (!x.is_integer())
        throw NonIntegerTargetExponent("verify_converter: x = " + x.str() + " is not an integer");
    const std::size_t n = l.n();
    if (static_cast<std::size_t>(tau.size()) != n)
        throw DimensionMismatch("verify_converter: size mismatch");
    const long xl = x.to_long();
    for (int t = 0; t < trials; ++t) {
        const RingMatrix a = sampler.constant_matrix(n);
        const Laurent lhs = qperm_naive(a.times_perm(tau));
        const Laurent rhs = qperm_with_exponents(a, l, xl);
        if (lhs != rhs) return false;
    }
    return true;
}

TauConverter compose(const TauConverter& t1, const TauConverter& t2) {
    if (t1.n != t2.n) throw DimensionMismatch("compose: dimension mismatch");
    TauConverter out;
    out.n = t1.n;
    out.tau = t1.tau * t2.tau;
    out.x = t1.x * t2.x;
    out.space.particular =
        t2.space.particular * t1.x + t1.space.particular.times_perm_transpose(t2.tau);
    for (const ExponentMatrix& k : preserver_basis(t1.n).matrices) out.space.kernel.push_back(k);
    return out;
}

CocycleReport cocycle_check() {
    CocycleReport report;
    const std::vector<Perm> s3 = symmetric_group(3);
    auto base_of = [&](const Perm& p) -> const ExponentMatrix& {
        return refdata::converter_base_matrix(p.cycles());
    };
    for (const Perm& alpha : s3)
        for (const Perm& beta : s3) {
            CocyclePair pair;
            pair.alpha = alpha;
            pair.beta = beta;
            const ExponentMatrix lhs = base_of(alpha * beta);
            ExponentMatrix rhs = base_of(beta);
            if (beta.sign() > 0)
                rhs += base_of(alpha);
            else
                rhs -= base_of(alpha);
            pair.exact = (lhs == rhs);
            pair.mod_kernel = pair.exact || is_preserver(rhs - lhs);
            if (pair.exact)
                ++report.exact_count;
            else if (pair.mod_kernel)
                ++report.mod_kernel_count;
            else
                ++report.fail_count;
            report.pairs.push_back(std::move(pair));
        }
    return report;
}

std::optional<ExponentMatrix> integerize_in_coset(const ExponentMatrix& m) {
    const std::size_t n = m.n();
    if (m.is_integer()) return m;
    // Cross-differences against row 1 / column 1 are coset invariants (the
    // kernel is Monge), so an integer representative exists iff they are all
    // integers; the residual uniform trace defect is then an integer shift
    // applied to the first row.
    ExponentMatrix shifted(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rat cross = m.at(i, j) - m.at(i, 0) - m.at(0, j) + m.at(0, 0);
            if (!cross.is_integer()) return std::nullopt;
            shifted.at(i, j) = cross;
        }
    const Rat defect = shifted.sigma_trace(Perm::identity(static_cast<int>(n))) -
                       m.sigma_trace(Perm::identity(static_cast<int>(n)));
    if (!defect.is_integer()) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) shifted.at(0, j) -= defect;
    return shifted;
}

ModularSolveResult root_of_unity_mode(int n, const Perm& tau, long m) {
    if (n > 5) throw SizeTooLarge("root_of_unity_mode: n > 5");
    if (m < 3) throw Error("root_of_unity_mode: modulus must be at least 3");
    if (tau.size() != n) throw DimensionMismatch("root_of_unity_mode: tau has wrong size");

    TauSolveResult base = solve_tau(n, tau);
    if (std::holds_alternative<ObstructionCertificate>(base)) {
        const auto& cert = std::get<ObstructionCertificate>(base);
        if (cert.gap % m == 0)
            throw Error("root_of_unity_mode: certificate gap vanishes mod m");
        return cert;
    }

    const TauConverter& conv = std::get<TauConverter>(base);
    auto integral = integerize_in_coset(conv.space.particular);
    if (!integral)
        throw Error("root_of_unity_mode: no integer representative in the coset");

    ModularLattice lat;
    lat.modulus = m;
    lat.x = conv.x;
    lat.particular = *integral;
    for (std::size_t i = 0; i < lat.particular.n(); ++i)
        for (std::size_t j = 0; j < lat.particular.n(); ++j) {
            mpz_class e = lat.particular.at(i, j).num();
            mpz_class r;
            mpz_mod(r.get_mpz_t(), e.get_mpz_t(), mpz_class(m).get_mpz_t());
            lat.particular.at(i, j) = Rat(r);
        }
    lat.kernel = preserver_basis(n).matrices;
    return lat;
}

} // namespace qperm
