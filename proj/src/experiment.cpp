#include "qclique/experiment.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "qclique/graph.hpp"
#include "qclique/theory.hpp"

namespace qclique {

namespace {

void validate(const ExperimentConfig& cfg) {
    if (cfg.n < 3) throw std::invalid_argument("experiment: n must be >= 3");
    if (!(cfg.p > 0.0 && cfg.p < 1.0)) throw std::invalid_argument("experiment: p must be in (0,1)");
    if (cfg.instances < 1) throw std::invalid_argument("experiment: instances must be >= 1");
    if (cfg.gammas.empty()) throw std::invalid_argument("experiment: no densities given");
    for (const auto& gamma : cfg.gammas) {
        if (!(gamma.value() > cfg.p))
            throw std::invalid_argument("experiment: every gamma must exceed p");
        if (gamma.num() == gamma.den())
            throw std::invalid_argument("experiment: gamma must be < 1");
    }
}

ExperimentReport run_impl(const ExperimentConfig& cfg, bool parallel) {
    validate(cfg);
    const int total = static_cast<int>(cfg.gammas.size()) * cfg.instances;
    std::vector<std::int64_t> omegas(static_cast<std::size_t>(total), 0);
    std::vector<unsigned char> solved(static_cast<std::size_t>(total), 0);

#if defined(QCLIQUE_HAVE_OPENMP)
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (int idx = 0; idx < total; ++idx) {
        int gi = idx / cfg.instances;
        int i = idx % cfg.instances;
        Graph g = gen_gnp(cfg.n, cfg.p,
                          derive_seed(cfg.master_seed, static_cast<std::uint64_t>(gi),
                                      static_cast<std::uint64_t>(i)));
        SolveOutcome outcome = omega_gamma(g, cfg.gammas[static_cast<std::size_t>(gi)], cfg.budget);
        omegas[static_cast<std::size_t>(idx)] = outcome.omega;
        solved[static_cast<std::size_t>(idx)] = outcome.status == SolveStatus::Solved ? 1 : 0;
    }
    (void)parallel;

    ExperimentReport report;
    for (std::size_t gi = 0; gi < cfg.gammas.size(); ++gi) {
        ExperimentRow row;
        row.gamma = cfg.gammas[gi];
        row.n = cfg.n;
        row.p = cfg.p;
        std::int64_t sum = 0;
        for (int i = 0; i < cfg.instances; ++i) {
            std::size_t idx = gi * static_cast<std::size_t>(cfg.instances) + static_cast<std::size_t>(i);
            if (!solved[idx]) {
                ++row.timeouts;
                continue;
            }
            std::int64_t w = omegas[idx];
            if (row.instances_solved == 0) {
                row.omega_min = row.omega_max = w;
            } else {
                row.omega_min = std::min(row.omega_min, w);
                row.omega_max = std::max(row.omega_max, w);
            }
            sum += w;
            ++row.instances_solved;
        }
        row.omega_avg = row.instances_solved > 0
                            ? static_cast<double>(sum) / static_cast<double>(row.instances_solved)
                            : 0.0;
        row.omega_th = predict_omega(ModelParams{row.gamma, cfg.p, cfg.n}).omega_th;
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& cfg) { return run_impl(cfg, true); }

ExperimentReport run_experiment_serial(const ExperimentConfig& cfg) { return run_impl(cfg, false); }

void emit_report_csv(const ExperimentReport& report, std::ostream& out) {
    if (report.rows.empty()) throw std::invalid_argument("emit_report_csv: empty report");
    out << "gamma,n,p,instances,omega_min,omega_max,omega_avg,omega_th,timeouts\n";
    char buf[256];
    for (const auto& r : report.rows) {
        std::snprintf(buf, sizeof buf, "%s,%d,%.2f,%d,%lld,%lld,%.2f,%.2f,%d\n", r.gamma.str().c_str(),
                      r.n, r.p, r.instances_solved, static_cast<long long>(r.omega_min),
                      static_cast<long long>(r.omega_max), r.omega_avg, r.omega_th, r.timeouts);
        out << buf;
    }
    if (!out) throw std::runtime_error("emit_report_csv: write failed");
}

void emit_report_json(const ExperimentReport& report, std::ostream& out) {
    if (report.rows.empty()) throw std::invalid_argument("emit_report_json: empty report");
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : report.rows) {
        rows.push_back({{"gamma", r.gamma.str()},
                        {"n", r.n},
                        {"p", r.p},
                        {"instances", r.instances_solved},
                        {"omega_min", r.omega_min},
                        {"omega_max", r.omega_max},
                        {"omega_avg", r.omega_avg},
                        {"omega_th", r.omega_th},
                        {"timeouts", r.timeouts}});
    }
    out << nlohmann::json{{"rows", rows}}.dump(2) << "\n";
    if (!out) throw std::runtime_error("emit_report_json: write failed");
}

ExperimentReport parse_report_json(std::istream& in) {
    nlohmann::json doc = nlohmann::json::parse(in);
    ExperimentReport report;
    for (const auto& j : doc.at("rows")) {
        ExperimentRow r;
        r.gamma = RationalDensity::parse(j.at("gamma").get<std::string>());
        r.n = j.at("n").get<int>();
        r.p = j.at("p").get<double>();
        r.instances_solved = j.at("instances").get<int>();
        r.omega_min = j.at("omega_min").get<std::int64_t>();
        r.omega_max = j.at("omega_max").get<std::int64_t>();
        r.omega_avg = j.at("omega_avg").get<double>();
        r.omega_th = j.at("omega_th").get<double>();
        r.timeouts = j.at("timeouts").get<int>();
        report.rows.push_back(r);
    }
    return report;
}

}  // namespace qclique
