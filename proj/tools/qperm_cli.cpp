#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>

#include "qperm/converters.hpp"
#include "qperm/dim2.hpp"
#include "qperm/evaluator.hpp"
#include "qperm/hessenberg.hpp"
#include "qperm/io.hpp"
#include "qperm/mixed.hpp"
#include "qperm/preservers.hpp"
#include "qperm/verify.hpp"

namespace {

using nlohmann::json;
using namespace qperm;

json solution_space_to_json(const AffineSolutionSpace& s) {
    json kernel = json::array();
    for (const auto& k : s.kernel) kernel.push_back(exponent_matrix_to_json(k));
    return {{"particular", exponent_matrix_to_json(s.particular)},
            {"kernel", std::move(kernel)},
            {"kernel_dim", s.kernel.size()}};
}

json certificate_to_json(const ObstructionCertificate& c) {
    json quad = json::array();
    for (const Perm& p : c.quadruple) quad.push_back(perm_to_json(p));
    return {{"quadruple", std::move(quad)}, {"gap", c.gap}};
}

double median_of(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    return xs[xs.size() / 2];
}

template <class F>
double timed_median(int runs, F&& body) {
    std::vector<double> times;
    for (int r = 0; r < runs; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        body();
        times.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    return median_of(std::move(times));
}

int cmd_eval(const std::string& matrix_path, const std::string& q0_text) {
    const RingMatrix a = matrix_from_json(load_json_file(matrix_path));
    if (q0_text.empty()) {
        const QPermResult r = qperm_naive_result(a);
        json out = {{"value", r.value.str()}, {"method", "naive"}, {"term_count", r.term_count}};
        std::cout << out.dump(2) << "\n";
    } else {
        const Rat q0 = Rat::from_string(q0_text);
        json out = {{"value", qperm_substituted(a, q0).str()}, {"q0", q0.str()}};
        std::cout << out.dump(2) << "\n";
    }
    return 0;
}

int cmd_hess_eval(const std::string& matrix_path, const std::string& q0_text) {
    const RingMatrix a = matrix_from_json(load_json_file(matrix_path));
    if (auto bad = hessenberg_violation(a)) {
        std::cerr << "error: entry (" << bad->first << "," << bad->second
                  << ") violates the Hessenberg pattern\n";
        return 2;
    }
    if (q0_text.empty()) {
        const QPermResult r = qperm_hessenberg_fast(a);
        json out = {{"value", r.value.str()},
                    {"method", "hessenberg-det"},
                    {"term_count", r.term_count}};
        std::cout << out.dump(2) << "\n";
    } else {
        const Rat q0 = Rat::from_string(q0_text);
        json out = {{"value", qperm_hessenberg_at(a, q0).str()}, {"q0", q0.str()}};
        std::cout << out.dump(2) << "\n";
    }
    return 0;
}

int cmd_preserver_basis(int n) {
    const PreserverBasis b = preserver_basis(n);
    json mats = json::array();
    for (const auto& m : b.matrices) mats.push_back(exponent_matrix_to_json(m));
    json out = {{"n", n}, {"dimension", b.matrices.size()}, {"basis", std::move(mats)}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_sheet_solve(int n, const std::string& theta_text, const std::string& k_text) {
    SheetSpec spec;
    spec.n = n;
    spec.theta = Rat::from_string(theta_text);
    const json kj = json::parse(k_text);
    for (const auto& x : kj) spec.k.push_back(x.get<long>());
    const auto result = sheet_solve(spec);
    if (std::holds_alternative<SheetInconsistent>(result)) {
        std::cout << json{{"consistent", false}}.dump(2) << "\n";
        return 1;
    }
    json out = {{"consistent", true},
                {"space", solution_space_to_json(std::get<AffineSolutionSpace>(result))}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_hess_membership(const std::string& matrix_path, const std::string& theta_text) {
    const ExponentMatrix h = exponent_matrix_from_json(load_json_file(matrix_path));
    const QSpec spec = theta_text.empty()
                           ? QSpec(GenericModulus{})
                           : QSpec(RootOfUnityTheta{Rat::from_string(theta_text)});
    const HessenbergExponent r = hessenberg_membership(h, spec);
    const char* tag = r.classification == HessClass::PlusAndMinus ? "plus-and-minus"
                      : r.classification == HessClass::PlusOnly   ? "plus-only"
                                                                  : "neither";
    std::cout << json{{"classification", tag}}.dump(2) << "\n";
    return 0;
}

int cmd_tau_convert(int n, const std::string& tau_text, long modulus) {
    const Perm tau = parse_perm_argument(tau_text, n);
    json out;
    out["tau"] = perm_to_json(tau);
    if (modulus > 0) {
        const ModularSolveResult r = root_of_unity_mode(n, tau, modulus);
        if (std::holds_alternative<ObstructionCertificate>(r)) {
            out["empty"] = true;
            out["certificate"] = certificate_to_json(std::get<ObstructionCertificate>(r));
            std::cout << out.dump(2) << "\n";
            return 1;
        }
        const auto& lat = std::get<ModularLattice>(r);
        out["empty"] = false;
        out["modulus"] = lat.modulus;
        out["x"] = lat.x.str();
        out["particular"] = exponent_matrix_to_json(lat.particular);
        out["kernel_dim"] = lat.kernel.size();
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    const TauSolveResult r = solve_tau(n, tau);
    if (std::holds_alternative<ObstructionCertificate>(r)) {
        out["empty"] = true;
        out["certificate"] = certificate_to_json(std::get<ObstructionCertificate>(r));
        std::cout << out.dump(2) << "\n";
        return 1;
    }
    const auto& conv = std::get<TauConverter>(r);
    out["empty"] = false;
    out["x"] = conv.x.str();
    out["particular"] = exponent_matrix_to_json(conv.space.particular);
    out["kernel_dim"] = conv.space.kernel.size();
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_mixed_search(int n, const std::string& out_path, int jobs) {
    const auto targets = search_consistent_targets(n, jobs);
    json comps = json::array();
    for (const TargetVector& t : targets) {
        const MixedComponent comp = recover_base_matrix(t);
        const SignMatrixReport sig = sign_matrix_invariants(comp);
        comps.push_back({{"b", t.b},
                         {"delta", t.delta},
                         {"m0", exponent_matrix_to_json(comp.m0)},
                         {"sign_invariants",
                          {{"det", sig.det}, {"per", sig.per}, {"trace", sig.trace}}}});
    }
    json out = {{"n", n}, {"count", targets.size()}, {"components", std::move(comps)}};
    json targets_json = json::array();
    for (const TargetVector& t : targets) targets_json.push_back(t.b);
    out["targets"] = std::move(targets_json);
    if (!out_path.empty()) {
        write_json_file(out_path, out);
        std::cout << "count " << targets.size() << ", written to " << out_path << "\n";
    } else {
        std::cout << out.dump(2) << "\n";
    }
    return 0;
}

int cmd_classify2(const std::string& matrix_path) {
    const RingMatrix m = matrix_from_json(load_json_file(matrix_path));
    const Classification c = classify(m);
    json out;
    if (const auto* f1 = std::get_if<ClassifiedFamilyI>(&c)) {
        out = {{"family", "I"},
               {"g", exponent_matrix_to_json(f1->g)},
               {"alpha", f1->alpha.str()},
               {"beta", f1->beta.str()},
               {"gamma", f1->gamma.str()}};
    } else if (const auto* f2 = std::get_if<ClassifiedFamilyII>(&c)) {
        out = {{"family", "II"},
               {"g", exponent_matrix_to_json(f2->g)},
               {"mu", f2->mu.str()}};
    } else {
        out = {{"family", "none"}};
        std::cout << out.dump(2) << "\n";
        return 1;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_verify(std::uint64_t seed, int jobs, bool skip_performance) {
    VerifyOptions opts;
    opts.seed = seed;
    opts.jobs = jobs;
    opts.include_performance = !skip_performance;
    const auto results = run_verification(opts);
    bool all = true;
    for (const auto& r : results) {
        std::cout << format_criterion(r) << "\n";
        all = all && r.passed;
    }
    std::cout << (all ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
    return all ? 0 : 1;
}

int cmd_bench(const std::string& suite, std::uint64_t seed, int jobs) {
    Sampler sampler(seed);
    if (suite == "hessenberg") {
        std::cout << "n, naive_median_s, fast_median_s\n";
        for (std::size_t n : {6u, 8u, 10u}) {
            const RingMatrix a = sampler.hessenberg_matrix(n);
            const double tn = timed_median(5, [&] { volatile bool s = qperm_naive(a).is_zero(); (void)s; });
            const double tf =
                timed_median(5, [&] { volatile bool s = qperm_hessenberg_fast(a).value.is_zero(); (void)s; });
            std::cout << n << ", " << tn << ", " << tf << "\n";
        }
        std::cout << "\nnumeric fast path (q0 = 3/2); the reference evaluator is capped at "
                     "n = 10 and infeasible beyond it:\nn, fast_median_s, naive\n";
        std::vector<std::pair<std::size_t, double>> samples;
        for (std::size_t n : {8u, 16u, 32u, 40u, 64u}) {
            const ExponentMatrix a = sampler.hessenberg_rational(n, 50, 20);
            const double t =
                timed_median(5, [&] { volatile bool s = qperm_hessenberg_at(a, Rat(3, 2)).is_zero(); (void)s; });
            std::cout << n << ", " << t << ", " << (n <= 10 ? "ok" : "infeasible") << "\n";
            if (n != 40) samples.emplace_back(n, t);
        }
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (const auto& [n, t] : samples) {
            const double x = std::log(static_cast<double>(n)), y = std::log(t);
            sx += x; sy += y; sxx += x * x; sxy += x * y;
        }
        const double m = static_cast<double>(samples.size());
        std::cout << "log-log slope: " << (m * sxy - sx * sy) / (m * sxx - sx * sx) << "\n";
        return 0;
    }
    if (suite == "mixed-search") {
        for (int n = 2; n <= 4; ++n) {
            const double t = timed_median(n == 4 ? 5 : 5, [&] {
                volatile std::size_t s = search_consistent_targets(n, jobs).size();
                (void)s;
            });
            std::cout << "n=" << n << " median " << t << " s (jobs=" << jobs << ")\n";
        }
        return 0;
    }
    std::cerr << "unknown bench suite '" << suite << "'\n";
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact q-permanent toolkit: evaluators, preserver/converter solvers, "
                 "Hessenberg fast path, and the mixed determinant-permanent search"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    int jobs = 1;
    app.add_option("--seed", seed, "seed for randomized verification trials");
    app.add_option("--jobs", jobs, "worker count for the search subcommands");

    std::string matrix_path, q0_text, theta_text, k_text, tau_text, out_path, suite;
    int n = 3;
    long modulus = 0;
    bool skip_performance = false;

    auto* eval = app.add_subcommand("eval", "q-permanent of a matrix file");
    eval->add_option("--matrix", matrix_path, "JSON matrix file")->required();
    eval->add_option("--q0", q0_text, "evaluate at a concrete rational q");

    auto* hess = app.add_subcommand("hess-eval", "fast evaluation for lower Hessenberg input");
    hess->add_option("--matrix", matrix_path, "JSON matrix file")->required();
    hess->add_option("--q0", q0_text, "evaluate at a concrete rational q");

    auto* basis = app.add_subcommand("preserver-basis", "basis of the preserver exponent space");
    basis->add_option("--n", n, "dimension")->required();

    auto* sheet = app.add_subcommand("sheet-solve", "unit-circle preserver sheet solver");
    sheet->add_option("--n", n, "dimension")->required();
    sheet->add_option("--theta", theta_text, "rational angle in (0,1), != 1/2")->required();
    sheet->add_option("--k", k_text, "JSON array, one integer per permutation (lex order)")
        ->required();

    auto* memb = app.add_subcommand("hess-membership", "classify a Hessenberg exponent matrix");
    memb->add_option("--matrix", matrix_path, "JSON exponent matrix")->required();
    memb->add_option("--theta", theta_text, "root-of-unity angle (omit for generic q)");

    auto* tauc = app.add_subcommand("tau-convert", "solve the permutational converter system");
    tauc->add_option("--n", n, "dimension")->required();
    tauc->add_option("--tau", tau_text, "cycle notation or one-line JSON array")->required();
    tauc->add_option("--m", modulus, "solve modulo m (q a primitive m-th root of unity)");

    auto* mixed = app.add_subcommand("mixed-search", "enumerate consistent mixed targets");
    mixed->add_option("--n", n, "dimension (2, 3, or 4)")->required();
    mixed->add_option("--out", out_path, "write the full JSON report here");

    auto* cls = app.add_subcommand("classify2", "classify a 4x4 converter matrix");
    cls->add_option("--matrix", matrix_path, "JSON matrix file")->required();

    auto* verify = app.add_subcommand("verify-paper", "run the full verification suite");
    verify->add_flag("--skip-performance", skip_performance, "omit the timing criterion");

    auto* bench = app.add_subcommand("bench", "timing harness");
    bench->add_option("--suite", suite, "hessenberg | mixed-search")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (eval->parsed()) return cmd_eval(matrix_path, q0_text);
        if (hess->parsed()) return cmd_hess_eval(matrix_path, q0_text);
        if (basis->parsed()) return cmd_preserver_basis(n);
        if (sheet->parsed()) return cmd_sheet_solve(n, theta_text, k_text);
        if (memb->parsed()) return cmd_hess_membership(matrix_path, theta_text);
        if (tauc->parsed()) return cmd_tau_convert(n, tau_text, modulus);
        if (mixed->parsed()) return cmd_mixed_search(n, out_path, jobs);
        if (cls->parsed()) return cmd_classify2(matrix_path);
        if (verify->parsed()) return cmd_verify(seed, jobs, skip_performance);
        if (bench->parsed()) return cmd_bench(suite, seed, jobs);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
