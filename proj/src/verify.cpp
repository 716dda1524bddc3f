#include "qperm/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>
#include <sstream>

#include "qperm/converters.hpp"
#include "qperm/dim2.hpp"
#include "qperm/evaluator.hpp"
#include "qperm/hessenberg.hpp"
#include "qperm/linalg.hpp"
#include "qperm/mixed.hpp"
#include "qperm/preservers.hpp"
#include "qperm/reference_data.hpp"

namespace qperm {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Runner {
    VerifyOptions opts;
    std::vector<CriterionResult> results;

    template <class F>
    void criterion(int id, const std::string& name, F&& body) {
        CriterionResult r;
        r.id = id;
        r.name = name;
        const auto t0 = Clock::now();
        try {
            std::ostringstream detail;
            r.passed = body(detail);
            r.detail = detail.str();
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = seconds_since(t0);
        results.push_back(std::move(r));
    }
};

std::set<std::vector<long>> as_set(const std::vector<TargetVector>& ts) {
    std::set<std::vector<long>> s;
    for (const auto& t : ts) s.insert(t.b);
    return s;
}

std::set<std::vector<long>> as_set(const std::vector<std::vector<long>>& vs) {
    return {vs.begin(), vs.end()};
}

bool mixed_search_matches(int n, std::size_t expected_count,
                          const std::vector<std::vector<long>>* reference, int jobs,
                          std::ostream& detail) {
    const auto found = search_consistent_targets(n, jobs);
    detail << "n=" << n << ": " << found.size() << " targets";
    if (found.size() != expected_count) return false;
    if (reference && as_set(found) != as_set(*reference)) {
        detail << " (set mismatch)";
        return false;
    }
    return true;
}

// Least-squares slope of log(time) against log(n).
double loglog_slope(const std::vector<std::pair<std::size_t, double>>& samples) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(samples.size());
    for (const auto& [n, t] : samples) {
        const double x = std::log(static_cast<double>(n));
        const double y = std::log(t);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

double median_time_hessenberg(std::size_t n, const Rat& q0, Sampler& sampler, int runs) {
    const ExponentMatrix a = sampler.hessenberg_rational(n, 50, 20);
    std::vector<double> times;
    for (int r = 0; r < runs; ++r) {
        const auto t0 = Clock::now();
        volatile bool sink = qperm_hessenberg_at(a, q0).is_zero();
        (void)sink;
        times.push_back(seconds_since(t0));
    }
    std::sort(times.begin(), times.end());
    return times[times.size() / 2];
}

} // namespace

std::vector<CriterionResult> run_verification(const VerifyOptions& opts) {
    Runner run;
    run.opts = opts;

    run.criterion(1, "mixed-search-exactness", [&](std::ostream& d) {
        bool ok = mixed_search_matches(2, 4, nullptr, opts.jobs, d);
        d << "; ";
        ok = mixed_search_matches(3, 15, &refdata::mixed_targets_n3(), opts.jobs, d) && ok;
        d << "; ";
        ok = mixed_search_matches(4, 8, &refdata::mixed_targets_n4(), opts.jobs, d) && ok;
        return ok;
    });

    run.criterion(2, "incidence-rank-law", [&](std::ostream& d) {
        bool ok = true;
        for (int n = 2; n <= 5; ++n) {
            const std::size_t r = rank_of(incidence_matrix(n).mat);
            const std::size_t want = static_cast<std::size_t>((n - 1) * (n - 1) + 1);
            d << "rank(A_" << n << ")=" << r << " ";
            ok = ok && r == want;
        }
        return ok;
    });

    run.criterion(3, "preserver-dimension", [&](std::ostream& d) {
        bool ok = true;
        for (int n = 2; n <= 6; ++n) {
            const PreserverBasis b = preserver_basis(n);
            const std::size_t un = static_cast<std::size_t>(n);
            RatMatrix stacked(b.matrices.size(), un * un);
            for (std::size_t r = 0; r < b.matrices.size(); ++r) {
                const auto v = b.matrices[r].vec();
                for (std::size_t c = 0; c < v.size(); ++c) stacked.at(r, c) = v[c];
            }
            const std::size_t dim = rank_of(stacked);
            bool traces_ok = true;
            for (const auto& m : b.matrices)
                for (const Perm& s : symmetric_group(n))
                    if (!m.sigma_trace(s).is_zero()) traces_ok = false;
            d << "n=" << n << ": dim=" << dim << (traces_ok ? "" : " trace!=0") << " ";
            ok = ok && dim == static_cast<std::size_t>(2 * n - 2) && traces_ok;
        }
        return ok;
    });

    run.criterion(4, "hessenberg-conversion", [&](std::ostream& d) {
        Sampler sampler(opts.seed);
        bool ok = true;
        for (std::size_t n = 3; n <= 8 && ok; ++n) {
            for (int t = 0; t < 50; ++t) {
                const RingMatrix a = sampler.hessenberg_matrix(n);
                const Laurent reference = qperm_naive(a);
                const Laurent via_det = qperm_hessenberg_fast(a).value;
                const Laurent via_per = permanent(schur_apply(h0(n), a, +1));
                if (reference != via_det || reference != via_per) {
                    d << "mismatch at n=" << n << " trial " << t;
                    ok = false;
                    break;
                }
            }
        }
        if (ok) d << "50 matrices per n in 3..8, all three routes agree";
        return ok;
    });

    run.criterion(5, "hessenberg-compatible-counts", [&](std::ostream& d) {
        bool ok = true;
        for (int n = 1; n <= 10; ++n) {
            const std::size_t count = hessenberg_compatible(n).size();
            ok = ok && count == (1ull << (n - 1));
        }
        d << "|S_n^*| = 2^(n-1) for n = 1..10";
        return ok;
    });

    run.criterion(6, "dihedral-threshold", [&](std::ostream& d) {
        bool ok = true;
        for (int n = 4; n <= 5; ++n) {
            std::size_t nonempty = 0;
            bool certs_ok = true;
            bool x_ok = true;
            const DihedralGroup dg = dihedral_group(n);
            for (const Perm& tau : symmetric_group(n)) {
                const TauSolveResult r = solve_tau(n, tau);
                if (std::holds_alternative<TauConverter>(r)) {
                    ++nonempty;
                    const auto& conv = std::get<TauConverter>(r);
                    const bool rotation =
                        std::count(dg.rotations.begin(), dg.rotations.end(), tau) > 0;
                    const bool reflection =
                        std::count(dg.reflections.begin(), dg.reflections.end(), tau) > 0;
                    if (rotation && conv.x != Rat(1)) x_ok = false;
                    if (reflection && conv.x != Rat(-1)) x_ok = false;
                    if (!rotation && !reflection) x_ok = false;
                } else {
                    const auto& cert = std::get<ObstructionCertificate>(r);
                    if (!certificate_valid(tau, cert)) certs_ok = false;
                }
            }
            const std::size_t expected = 2 * static_cast<std::size_t>(n);
            d << "n=" << n << ": " << nonempty << " nonempty"
              << (x_ok ? "" : " x-mismatch") << (certs_ok ? "" : " bad-certificate") << "; ";
            ok = ok && nonempty == expected && x_ok && certs_ok;
        }
        return ok;
    });

    run.criterion(7, "converter-base-table", [&](std::ostream& d) {
        Sampler sampler(opts.seed);
        bool ok = true;
        for (const auto& entry : refdata::converter_bases_n3()) {
            const Perm tau = refdata::converter_base_acting_perm(entry.label);
            const bool good =
                verify_converter(tau, entry.matrix, Rat(entry.x), 20, sampler);
            if (!good) {
                d << "entry " << entry.label << " failed ";
                ok = false;
            }
        }
        if (ok) d << "all six base matrices verified on 20 random matrices each";
        return ok;
    });

    run.criterion(8, "mixed-example-matrices", [&](std::ostream& d) {
        Sampler sampler(opts.seed);
        const bool ok3 = verify_mixed_identity(refdata::mixed_example_n3(), 20, sampler);
        const bool ok4 = verify_mixed_identity(refdata::mixed_example_n4(), 20, sampler);
        d << "n=3 " << (ok3 ? "ok" : "FAIL") << ", n=4 " << (ok4 ? "ok" : "FAIL");
        return ok3 && ok4;
    });

    run.criterion(9, "sign-matrix-spectra", [&](std::ostream& d) {
        bool ok = true;
        for (int n = 2; n <= 4; ++n) {
            std::set<long> dets, pers, traces;
            for (const TargetVector& t : search_consistent_targets(n, opts.jobs)) {
                const MixedComponent comp = recover_base_matrix(t);
                const SignMatrixReport rep = sign_matrix_invariants(comp);
                if (!rep.det_formula_holds || !rep.per_formula_holds) ok = false;
                dets.insert(rep.det);
                pers.insert(rep.per);
                traces.insert(rep.trace);
            }
            const refdata::SignSpectra& want = refdata::sign_spectra(n);
            auto same = [](const std::set<long>& got, const std::vector<long>& ref) {
                return got == std::set<long>(ref.begin(), ref.end());
            };
            const bool match =
                same(dets, want.det) && same(pers, want.per) && same(traces, want.trace);
            d << "n=" << n << (match ? " ok " : " MISMATCH ");
            ok = ok && match;
        }
        return ok;
    });

    run.criterion(10, "zero-locus-example", [&](std::ostream& d) {
        // 4x4 matrix with the rational-function corner entry, cleared by the
        // denominator 1 - q - q^2 (row scaling multiplies the value through).
        const Laurent q = Laurent::q();
        const Laurent denom = Laurent(1) - q - q.pow(2);
        const Laurent numer = (q.pow(2)) * (Laurent(1) - q.pow(4) - q.pow(5));
        RingMatrix a(4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) a.at(i, j) = (j > i) ? -q : Laurent(1);
        for (std::size_t j = 0; j < 3; ++j) a.at(3, j) = denom;
        a.at(3, 3) = numer;
        const Laurent value = qperm_naive(a);
        d << "(1-q-q^2) * P_q(A) = " << value.str();
        return value.is_zero();
    });

    run.criterion(11, "dim2-classification", [&](std::ostream& d) {
        Sampler sampler(opts.seed);
        bool ok = true;
        int paradoxes = 0;
        for (int t = 0; t < 100 && ok; ++t) {
            ExponentMatrix g(2);
            do {
                g = sampler.rational_matrix(2, 9, 4);
            } while ((g.at(0, 0) * g.at(1, 1) - g.at(0, 1) * g.at(1, 0)).is_zero());

            const FamilyIParams p1{g, sampler.rational(9, 4), sampler.rational(9, 4)};
            const RingMatrix m1 = build_family_one(p1);
            if (!verify_congruence(m1) || !verify_conversion_identity(m1, 20, sampler)) ok = false;
            try {
                const Classification c1 = classify(m1);
                const auto* f1 = std::get_if<ClassifiedFamilyI>(&c1);
                if (!f1 || f1->g != p1.g || f1->alpha != p1.alpha || f1->beta != p1.beta)
                    ok = false;
            } catch (const RankOneParadox&) {
                ++paradoxes;
                ok = false;
            }

            const FamilyIIParams p2{g, sampler.rational(9, 4)};
            const RingMatrix m2 = build_family_two(p2);
            if (!verify_congruence(m2) || !verify_conversion_identity(m2, 20, sampler)) ok = false;
            try {
                const Classification c2 = classify(m2);
                const auto* f2 = std::get_if<ClassifiedFamilyII>(&c2);
                if (!f2 || f2->g != p2.g || f2->mu != p2.mu) ok = false;
            } catch (const RankOneParadox&) {
                ++paradoxes;
                ok = false;
            }
        }
        if (!std::holds_alternative<NotAConverter>(classify(RingMatrix::identity(4)))) ok = false;
        d << "100 draws per family, paradoxes=" << paradoxes;
        return ok && paradoxes == 0;
    });

    run.criterion(12, "reversal-duality", [&](std::ostream& d) {
        Sampler sampler(opts.seed);
        bool ok = true;
        for (std::size_t n = 2; n <= 6 && ok; ++n)
            for (int t = 0; t < 20; ++t)
                if (!duality_check(sampler.constant_matrix(n))) {
                    d << "failed at n=" << n << " trial " << t;
                    ok = false;
                    break;
                }
        if (ok) d << "20 random matrices per n in 2..6";
        return ok;
    });

    run.criterion(13, "dimension-five-obstruction", [&](std::ostream& d) {
        const ObstructionN5 r = obstruction_n5();
        d << "rotation ell sum " << r.rotation_ell_sum << ", reflection ell sum "
          << r.reflection_ell_sum << ", matrix sums equal: " << (r.matrix_sums_equal ? "yes" : "no");
        return r.rotation_ell_sum == 20 && r.reflection_ell_sum == 30 && r.matrix_sums_equal &&
               r.impossible;
    });

    run.criterion(14, "sheet-lattice-constraints", [&](std::ostream& d) {
        const LatticeConstraints c4 = lattice_constraints(4);
        // k_id + k_(12)(34) - k_(12) - k_(34) = 0 in the lex order of S_4^*.
        std::vector<Rat> relation(c4.order.size(), Rat(0));
        auto index_of = [&](const std::vector<int>& one_line) {
            for (std::size_t i = 0; i < c4.order.size(); ++i)
                if (c4.order[i].one_line() == one_line) return i;
            throw Error("expected permutation missing from S_4^*");
        };
        relation[index_of({1, 2, 3, 4})] = Rat(1);
        relation[index_of({2, 1, 4, 3})] = Rat(1);
        relation[index_of({2, 1, 3, 4})] = Rat(-1);
        relation[index_of({1, 2, 4, 3})] = Rat(-1);

        RatMatrix span(c4.order.size(), c4.relations.size());
        for (std::size_t j = 0; j < c4.relations.size(); ++j)
            for (std::size_t i = 0; i < c4.order.size(); ++i)
                span.at(i, j) = Rat(c4.relations[j][i]);
        const bool produced = solve_linear(span, relation).consistent;

        const LatticeConstraints c6 = lattice_constraints(6);
        d << "n=4 relations=" << c4.relations.size()
          << (produced ? " (contains displayed relation)" : " (missing displayed relation)")
          << ", n=6 relations=" << c6.relations.size();
        return produced && c6.relations.size() >= 6;
    });

    if (opts.include_performance) {
        run.criterion(15, "fast-path-performance", [&](std::ostream& d) {
            Sampler sampler(opts.seed);
            const Rat q0(3, 2);
            const double t40 = median_time_hessenberg(40, q0, sampler, 5);
            std::vector<std::pair<std::size_t, double>> samples;
            for (std::size_t n : {8u, 16u, 32u, 64u})
                samples.emplace_back(n, median_time_hessenberg(n, q0, sampler, 5));
            const double slope = loglog_slope(samples);
            d << "n=40 median " << t40 << " s, slope " << slope;
            return t40 < 1.0 && slope <= 3.5;
        });
    }

    return run.results;
}

std::string format_criterion(const CriterionResult& r) {
    std::ostringstream os;
    os << (r.passed ? "[PASS] " : "[FAIL] ") << "criterion " << r.id << " " << r.name;
    if (!r.detail.empty()) os << ": " << r.detail;
    os << " (" << r.seconds << " s)";
    return os.str();
}

} // namespace qperm
