#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qclique/rational.hpp"
#include "qclique/rng.hpp"
#include "qclique/solver.hpp"

namespace qclique {

// One experiment sweep: `instances` graphs from G(n,p) per density, solved
// exactly. Instance (gamma_index, i) draws its graph from
// derive_seed(master_seed, gamma_index, i); nothing else is random.
struct ExperimentConfig {
    int n = 0;
    double p = 0.0;
    std::vector<RationalDensity> gammas;
    int instances = 0;
    Seed master_seed;
    SearchBudget budget;
};

struct ExperimentRow {
    RationalDensity gamma;
    int n = 0;
    double p = 0.0;
    int instances_solved = 0;
    std::int64_t omega_min = 0;
    std::int64_t omega_max = 0;
    double omega_avg = 0.0;
    double omega_th = 0.0;
    int timeouts = 0;
};

struct ExperimentReport {
    std::vector<ExperimentRow> rows;
};

// Parallel over instances when OpenMP is enabled; the report is identical for
// any worker count (per-instance seeds, order-independent aggregation).
ExperimentReport run_experiment(const ExperimentConfig& cfg);

// Serial reference implementation kept for testing and benchmarking.
ExperimentReport run_experiment_serial(const ExperimentConfig& cfg);

// CSV with header gamma,n,p,instances,omega_min,omega_max,omega_avg,omega_th,timeouts.
// gamma prints as num/den; p, omega_avg and omega_th with 2 decimals.
void emit_report_csv(const ExperimentReport& report, std::ostream& out);

void emit_report_json(const ExperimentReport& report, std::ostream& out);
ExperimentReport parse_report_json(std::istream& in);

}  // namespace qclique
