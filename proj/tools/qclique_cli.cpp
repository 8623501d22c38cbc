// Command-line front end: predict / gen / solve / experiment / diagnose / verify.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qclique/experiment.hpp"
#include "qclique/flatness.hpp"
#include "qclique/graph.hpp"
#include "qclique/overlap.hpp"
#include "qclique/solver.hpp"
#include "qclique/theory.hpp"
#include "qclique/verify.hpp"

namespace {

using namespace qclique;

std::vector<RationalDensity> parse_gammas(const std::string& csv) {
    std::vector<RationalDensity> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(RationalDensity::parse(item));
    }
    if (out.empty()) throw std::invalid_argument("no densities in --gammas");
    return out;
}

// Writes either to --out or stdout.
class OutputTarget {
  public:
    explicit OutputTarget(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open " + path + " for writing");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

int cmd_predict(std::int64_t n, const std::string& gamma_text, double p, double eps) {
    ModelParams params{RationalDensity::parse(gamma_text), p, n};
    Prediction pred = predict_omega(params, eps);
    std::printf("alpha=%.6f\n", pred.alpha);
    std::printf("omega_th=%.4f\n", pred.omega_th);
    std::printf("candidates=%lld,%lld\n", static_cast<long long>(pred.candidates.first),
                static_cast<long long>(pred.candidates.second));
    std::printf("kappa=%.4f\n", pred.kappa);
    std::printf("epsilon=%.4f\n", pred.epsilon);
    if (pred.omega_th_integral) std::printf("omega_th_integral=1\n");
    return 0;
}

int cmd_gen(const std::string& model, int n, double p, std::int64_t m, std::uint64_t seed,
            const std::string& out_path) {
    Graph g = model == "gnp" ? gen_gnp(n, p, Seed{seed}) : gen_gnm(n, m, Seed{seed});
    g.check_invariants();
    write_edge_list_file(g, out_path);
    std::printf("wrote %s: n=%d m=%lld\n", out_path.c_str(), g.vertex_count(),
                static_cast<long long>(g.edge_count()));
    return 0;
}

int cmd_solve(const std::string& input, const std::string& gamma_text, double max_seconds) {
    Graph g = read_edge_list_file(input);
    RationalDensity gamma = RationalDensity::parse(gamma_text);
    SearchBudget budget;
    if (max_seconds > 0) budget.max_seconds = max_seconds;
    SolveOutcome outcome = omega_gamma(g, gamma, budget);
    nlohmann::json line{
        {"omega", outcome.omega},
        {"witness", outcome.witness.to_vector()},
        {"status", outcome.status == SolveStatus::Solved ? "solved" : "timeout"},
        {"nodes", outcome.stats.nodes},
        {"prunes", outcome.stats.prunes},
        {"elapsed_seconds", outcome.stats.seconds},
    };
    std::cout << line.dump() << "\n";
    return outcome.status == SolveStatus::Solved ? 0 : 3;
}

int cmd_experiment(int n, double p, const std::string& gammas_csv, int instances,
                   std::uint64_t seed, const std::string& format, const std::string& out_path,
                   double max_seconds, bool no_budget) {
    ExperimentConfig cfg;
    cfg.n = n;
    cfg.p = p;
    cfg.gammas = parse_gammas(gammas_csv);
    cfg.instances = instances;
    cfg.master_seed = Seed{seed};
    if (max_seconds > 0) {
        cfg.budget.max_seconds = max_seconds;
    } else if (n >= 100) {
        // Large-n rows get a default per-instance budget; genuinely hard
        // parameter ranges must opt out explicitly.
        if (p > 0.10 && !no_budget)
            throw std::invalid_argument(
                "n >= 100 with p > 0.10 can be very slow; pass --no-budget or --max-seconds");
        if (!no_budget) cfg.budget.max_seconds = 300.0;
    }
    ExperimentReport report = run_experiment(cfg);
    OutputTarget target(out_path);
    if (format == "json")
        emit_report_json(report, target.stream());
    else
        emit_report_csv(report, target.stream());
    for (const auto& row : report.rows)
        if (row.timeouts > 0)
            std::fprintf(stderr, "warning: gamma=%s had %d timeout(s)\n", row.gamma.str().c_str(),
                         row.timeouts);
    return 0;
}

int cmd_diagnose_flatness(int k, const std::string& gamma_text, int samples, std::uint64_t seed,
                          const std::string& out_path) {
    RationalDensity gamma = RationalDensity::parse(gamma_text);
    double fraction = sample_flat_fraction(k, gamma, samples, Seed{seed});
    OutputTarget target(out_path);
    target.stream() << "k,gamma,samples,seed,flat_fraction\n";
    char buf[128];
    std::snprintf(buf, sizeof buf, "%d,%s,%d,%llu,%.6f\n", k, gamma.str().c_str(), samples,
                  static_cast<unsigned long long>(seed), fraction);
    target.stream() << buf;
    return 0;
}

int cmd_diagnose_variance(const std::string& n_grid, const std::string& gamma_text,
                          const std::string& p_text, std::int64_t k_override,
                          const std::string& out_path) {
    RationalDensity gamma = RationalDensity::parse(gamma_text);
    RationalDensity p = RationalDensity::parse(p_text);
    OutputTarget target(out_path);
    target.stream() << "n,k,gamma,p,total\n";
    std::stringstream ss(n_grid);
    std::string item;
    std::int64_t k = k_override;
    while (std::getline(ss, item, ',')) {
        std::int64_t n = static_cast<std::int64_t>(std::stod(item));
        // Default subset size: the larger Theorem-1 candidate at the first
        // grid point, held fixed across the sweep.
        if (k <= 0) k = predict_omega(ModelParams{gamma, p.value(), n}).candidates.second;
        VarianceProfile prof = variance_ratio_profile(n, k, gamma, p);
        char buf[160];
        std::snprintf(buf, sizeof buf, "%lld,%lld,%s,%s,%.6e\n", static_cast<long long>(n),
                      static_cast<long long>(k), gamma.str().c_str(), p.str().c_str(), prof.total);
        target.stream() << buf;
    }
    return 0;
}

int cmd_diagnose_lemma1(const std::string& n_grid, const std::string& gamma_text, double p,
                        const std::string& out_path) {
    RationalDensity gamma = RationalDensity::parse(gamma_text);
    double a = alpha(gamma, p);
    OutputTarget target(out_path);
    target.stream() << "N,log_point,log_tail,alpha,exponent_dev,dev_cap\n";
    std::stringstream ss(n_grid);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::int64_t n = static_cast<std::int64_t>(std::stod(item));
        BinomLogProbs probs = binom_log_probs(n, p, gamma);
        double dev = std::fabs(-probs.point.log / static_cast<double>(n) - a);
        double cap = 2.0 * std::log(static_cast<double>(n)) / static_cast<double>(n);
        char buf[200];
        std::snprintf(buf, sizeof buf, "%lld,%.6f,%.6f,%.6f,%.6e,%.6e\n", static_cast<long long>(n),
                      probs.point.log, probs.tail.log, a, dev, cap);
        target.stream() << buf;
    }
    return 0;
}

int cmd_verify(const std::string& level_text, std::uint64_t seed) {
    VerifyLevel level = level_text == "full" ? VerifyLevel::Full : VerifyLevel::Quick;
    VerifySummary summary = verify_suite(level, Seed{seed});
    for (const auto& check : summary.checks)
        std::printf("%s %s: %s\n", check.pass ? "PASS" : "FAIL", check.name.c_str(),
                    check.detail.c_str());
    int failures = summary.failures();
    std::printf("%d/%zu checks passed\n", static_cast<int>(summary.checks.size()) - failures,
                summary.checks.size());
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact quasi-clique solver and two-point concentration toolkit"};
    app.require_subcommand(1);

    // predict
    std::int64_t pr_n = 0;
    std::string pr_gamma;
    double pr_p = 0.0, pr_eps = kDefaultKappaEpsilon;
    auto* predict = app.add_subcommand("predict", "Predictor for the largest quasi-clique size in G(n,p)");
    predict->add_option("--n", pr_n, "vertex count")->required();
    predict->add_option("--p", pr_p, "edge probability")->required();
    predict->add_option("--gamma", pr_gamma, "density as p/q or decimal")->required();
    predict->add_option("--eps", pr_eps, "epsilon for the kappa bound");

    // gen
    std::string gen_model, gen_out;
    int gen_n = 0;
    double gen_p = 0.0;
    std::int64_t gen_m = -1;
    std::uint64_t gen_seed = 0;
    auto* gen = app.add_subcommand("gen", "Generate a random graph and write it as an edge list");
    gen->add_option("--model", gen_model, "gnp or gnm")->required()->check(CLI::IsMember({"gnp", "gnm"}));
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--p", gen_p, "edge probability (gnp)");
    gen->add_option("--m", gen_m, "edge count (gnm)");
    gen->add_option("--seed", gen_seed, "64-bit seed")->required();
    gen->add_option("--out", gen_out, "output path")->required();

    // solve
    std::string solve_input, solve_gamma;
    double solve_max_seconds = 0.0;
    auto* solve = app.add_subcommand("solve", "Exact quasi-clique number of an edge-list graph");
    solve->add_option("--input", solve_input, "edge-list file")->required();
    solve->add_option("--gamma", solve_gamma, "density as p/q or decimal")->required();
    solve->add_option("--max-seconds", solve_max_seconds, "time budget");

    // experiment
    int ex_n = 0, ex_instances = 0;
    double ex_p = 0.0, ex_max_seconds = 0.0;
    std::string ex_gammas, ex_format = "csv", ex_out;
    std::uint64_t ex_seed = 0;
    bool ex_no_budget = false;
    auto* experiment = app.add_subcommand("experiment", "Solve many G(n,p) instances and tabulate");
    experiment->add_option("--n", ex_n, "vertex count")->required();
    experiment->add_option("--p", ex_p, "edge probability")->required();
    experiment->add_option("--gammas", ex_gammas, "comma-separated densities")->required();
    experiment->add_option("--instances", ex_instances, "instances per density")->required();
    experiment->add_option("--seed", ex_seed, "master seed")->required();
    experiment->add_option("--format", ex_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    experiment->add_option("--out", ex_out, "output path (default stdout)");
    experiment->add_option("--max-seconds", ex_max_seconds, "per-instance budget");
    experiment->add_flag("--no-budget", ex_no_budget, "disable the default large-n budget");

    // diagnose
    auto* diagnose = app.add_subcommand("diagnose", "Lemma-level numeric diagnostics (CSV)");
    diagnose->require_subcommand(1);
    int fl_k = 0, fl_samples = 0;
    std::string fl_gamma, fl_out;
    std::uint64_t fl_seed = 0;
    auto* fl = diagnose->add_subcommand("flatness", "Flat fraction of G(k,m) samples");
    fl->add_option("--k", fl_k)->required();
    fl->add_option("--gamma", fl_gamma)->required();
    fl->add_option("--samples", fl_samples)->required();
    fl->add_option("--seed", fl_seed)->required();
    fl->add_option("--out", fl_out);
    std::string va_ngrid, va_gamma, va_p, va_out;
    std::int64_t va_k = 0;
    auto* va = diagnose->add_subcommand("variance", "Variance-ratio totals over an n grid");
    va->add_option("--n-grid", va_ngrid, "comma-separated n values")->required();
    va->add_option("--gamma", va_gamma)->required();
    va->add_option("--p", va_p)->required();
    va->add_option("--k", va_k, "subset size (default: larger candidate at the first n)");
    va->add_option("--out", va_out);
    std::string l1_ngrid, l1_gamma, l1_out;
    double l1_p = 0.0;
    auto* l1 = diagnose->add_subcommand("lemma1", "Binomial point/tail exponents over an N grid");
    l1->add_option("--N-grid", l1_ngrid, "comma-separated N values")->required();
    l1->add_option("--gamma", l1_gamma)->required();
    l1->add_option("--p", l1_p)->required();
    l1->add_option("--out", l1_out);

    // verify
    std::string ve_level = "quick";
    std::uint64_t ve_seed = 0;
    auto* verify = app.add_subcommand("verify", "Run the numeric verification suite");
    verify->add_option("--level", ve_level)->check(CLI::IsMember({"quick", "full"}));
    verify->add_option("--seed", ve_seed, "seed for sampled checks");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*predict) return cmd_predict(pr_n, pr_gamma, pr_p, pr_eps);
        if (*gen) {
            if (gen_model == "gnp" && !(gen_p > 0.0)) throw std::invalid_argument("gnp needs --p");
            if (gen_model == "gnm" && gen_m < 0) throw std::invalid_argument("gnm needs --m");
            return cmd_gen(gen_model, gen_n, gen_p, gen_m, gen_seed, gen_out);
        }
        if (*solve) return cmd_solve(solve_input, solve_gamma, solve_max_seconds);
        if (*experiment)
            return cmd_experiment(ex_n, ex_p, ex_gammas, ex_instances, ex_seed, ex_format, ex_out,
                                  ex_max_seconds, ex_no_budget);
        if (*fl) return cmd_diagnose_flatness(fl_k, fl_gamma, fl_samples, fl_seed, fl_out);
        if (*va) return cmd_diagnose_variance(va_ngrid, va_gamma, va_p, va_k, va_out);
        if (*l1) return cmd_diagnose_lemma1(l1_ngrid, l1_gamma, l1_p, l1_out);
        if (*verify) return cmd_verify(ve_level, ve_seed);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
