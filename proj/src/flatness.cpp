#include "qclique/flatness.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "qclique/overlap.hpp"
#include "qclique/solver.hpp"

namespace qclique {

namespace {

// Violation test at size ell: e > gamma*T + D, compared as
// e*den - num*T > den*D so the rational part stays exact.
bool violates(std::int64_t e, std::int64_t t_pairs, const RationalDensity& gamma, double slack) {
    double lhs = static_cast<double>(e) * static_cast<double>(gamma.den()) -
                 static_cast<double>(gamma.num()) * static_cast<double>(t_pairs);
    return lhs > static_cast<double>(gamma.den()) * slack;
}

// Smallest integer edge count that violates the bound at size ell.
std::int64_t min_violating_edges(std::int64_t t_pairs, const RationalDensity& gamma, double slack) {
    double approx = (static_cast<double>(gamma.num()) * static_cast<double>(t_pairs)) /
                        static_cast<double>(gamma.den()) +
                    slack;
    std::int64_t v = static_cast<std::int64_t>(std::floor(approx)) + 1;
    while (v > 0 && violates(v - 1, t_pairs, gamma, slack)) --v;
    while (!violates(v, t_pairs, gamma, slack)) ++v;
    return v;
}

FlatnessReport exhaustive_report(const Graph& g, const RationalDensity& gamma) {
    const int k = g.vertex_count();
    FlatnessReport report;
    std::vector<double> slack(static_cast<std::size_t>(k), 0.0);
    std::vector<std::int64_t> vmin(static_cast<std::size_t>(k), 0);
    std::vector<std::int64_t> tpairs(static_cast<std::size_t>(k), 0);
    bool any_possible = false;
    for (int ell = 2; ell <= k - 1; ++ell) {
        tpairs[static_cast<std::size_t>(ell)] = static_cast<std::int64_t>(ell) * (ell - 1) / 2;
        slack[static_cast<std::size_t>(ell)] = flatness_slack(k, ell);
        vmin[static_cast<std::size_t>(ell)] =
            min_violating_edges(tpairs[static_cast<std::size_t>(ell)], gamma, slack[static_cast<std::size_t>(ell)]);
        if (vmin[static_cast<std::size_t>(ell)] <=
            std::min<std::int64_t>(tpairs[static_cast<std::size_t>(ell)], g.edge_count()))
            any_possible = true;
    }
    if (!any_possible) return report;

    std::vector<std::uint32_t> adj(static_cast<std::size_t>(k), 0);
    for (int v = 0; v < k; ++v) {
        std::uint32_t row = 0;
        for (int u = 0; u < k; ++u)
            if (u != v && g.has_edge(v, u)) row |= 1u << u;
        adj[static_cast<std::size_t>(v)] = row;
    }

    std::vector<FlatnessViolation> per_ell(static_cast<std::size_t>(k));
    std::uint32_t mask = 0;
    std::int64_t e = 0;
    int size = 0;
    const std::uint64_t total = 1ULL << k;
    for (std::uint64_t i = 1; i < total; ++i) {
        int b = std::countr_zero(i);
        std::uint32_t bit = 1u << b;
        if (mask & bit) {
            mask ^= bit;
            e -= std::popcount(adj[static_cast<std::size_t>(b)] & mask);
            --size;
        } else {
            mask ^= bit;
            e += std::popcount(adj[static_cast<std::size_t>(b)] & mask);
            ++size;
        }
        if (size < 2 || size > k - 1) continue;
        if (e < vmin[static_cast<std::size_t>(size)]) continue;
        auto& v = per_ell[static_cast<std::size_t>(size)];
        v.ell = size;
        ++v.count;
        if (v.count == 1 || e > v.worst_edges) {
            v.worst_edges = e;
            v.worst = VertexSet(k);
            for (int u = 0; u < k; ++u)
                if ((mask >> u) & 1u) v.worst.add(u);
        }
    }
    for (int ell = 2; ell <= k - 1; ++ell) {
        if (per_ell[static_cast<std::size_t>(ell)].count > 0)
            report.violations.push_back(per_ell[static_cast<std::size_t>(ell)]);
    }
    return report;
}

FlatnessReport search_report(const Graph& g, const RationalDensity& gamma) {
    const int k = g.vertex_count();
    FlatnessReport report;
    for (int ell = 2; ell <= k - 1; ++ell) {
        std::int64_t t_pairs = static_cast<std::int64_t>(ell) * (ell - 1) / 2;
        double slack = flatness_slack(k, ell);
        std::int64_t vmin = min_violating_edges(t_pairs, gamma, slack);
        if (vmin > std::min<std::int64_t>(t_pairs, g.edge_count())) continue;  // cannot bind
        FeasibilityResult found = find_subset_with_edges(g, ell, vmin);
        if (found.feasibility != Feasibility::Yes) continue;
        FlatnessViolation v;
        v.ell = ell;
        v.count = 1;
        v.worst = found.witness;
        v.worst_edges = g.induced_edge_count(found.witness);
        // Improve the witness to the worst subset when the max search closes
        // within a modest node budget.
        SearchBudget budget;
        budget.max_nodes = 20'000'000;
        MaxEdgesResult best = max_edges_of_size_k(g, ell, budget);
        if (best.best > v.worst_edges) {
            v.worst = best.witness;
            v.worst_edges = best.best;
        }
        report.violations.push_back(v);
    }
    return report;
}

}  // namespace

FlatnessReport flatness_report(const Graph& g, const RationalDensity& gamma) {
    const int k = g.vertex_count();
    if (k < 3) throw std::invalid_argument("flatness_report: graph must have >= 3 vertices");
    std::int64_t s_pairs = static_cast<std::int64_t>(k) * (k - 1) / 2;
    std::int64_t required = static_cast<std::int64_t>(gamma.ceil_mul(static_cast<std::uint64_t>(s_pairs)));

    FlatnessReport report = (k <= kFlatnessExhaustiveLimit) ? exhaustive_report(g, gamma)
                                                            : search_report(g, gamma);
    report.edge_count_ok = (g.edge_count() == required);
    report.is_flat = report.edge_count_ok && report.violations.empty();
    return report;
}

namespace {

int count_flat_samples(int k, const RationalDensity& gamma, int samples, Seed seed, bool parallel) {
    if (k < 3) throw std::invalid_argument("sample_flat_fraction: k must be >= 3");
    if (samples < 1) throw std::invalid_argument("sample_flat_fraction: samples must be >= 1");
    std::int64_t s_pairs = static_cast<std::int64_t>(k) * (k - 1) / 2;
    std::int64_t m = static_cast<std::int64_t>(gamma.ceil_mul(static_cast<std::uint64_t>(s_pairs)));
    int flat = 0;
#if defined(QCLIQUE_HAVE_OPENMP)
#pragma omp parallel for schedule(dynamic) reduction(+ : flat) if (parallel)
#endif
    for (int i = 0; i < samples; ++i) {
        Graph g = gen_gnm(k, m, derive_seed(seed, 0, static_cast<std::uint64_t>(i)));
        if (flatness_report(g, gamma).is_flat) ++flat;
    }
    (void)parallel;
    return flat;
}

}  // namespace

double sample_flat_fraction(int k, const RationalDensity& gamma, int samples, Seed seed) {
    return static_cast<double>(count_flat_samples(k, gamma, samples, seed, true)) /
           static_cast<double>(samples);
}

double sample_flat_fraction_serial(int k, const RationalDensity& gamma, int samples, Seed seed) {
    return static_cast<double>(count_flat_samples(k, gamma, samples, seed, false)) /
           static_cast<double>(samples);
}

}  // namespace qclique
