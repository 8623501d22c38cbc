#include "qclique/verify.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "qclique/bigint.hpp"
#include "qclique/experiment.hpp"
#include "qclique/flatness.hpp"
#include "qclique/graph.hpp"
#include "qclique/overlap.hpp"
#include "qclique/reference_grid.hpp"
#include "qclique/solver.hpp"
#include "qclique/theory.hpp"

namespace qclique {

namespace {

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b, c);
    return buf;
}

CheckResult check_lemma1_exponent() {
    CheckResult res{"lemma1-exponent", true, ""};
    RationalDensity gamma(3, 5);
    double p = 0.3;
    double a = alpha(gamma, p);
    double prev_dev = 1e300;
    std::ostringstream detail;
    for (std::int64_t n : {100, 1000, 10000}) {
        LogValue point = binom_log_probs(n, p, gamma).point;
        double dev = std::fabs(-point.log / static_cast<double>(n) - a);
        double cap = 2.0 * std::log(static_cast<double>(n)) / static_cast<double>(n);
        detail << "N=" << n << " dev=" << dev << " cap=" << cap << "; ";
        if (dev > cap || dev >= prev_dev) res.pass = false;
        prev_dev = dev;
    }
    res.detail = detail.str();
    return res;
}

CheckResult check_stirling_residual() {
    CheckResult res{"stirling-residual", true, ""};
    double worst = 0.0;
    for (std::int64_t n : {100, 1000, 100000}) {
        for (auto [num, den] : {std::pair<int, int>{3, 10}, {1, 2}, {7, 10}}) {
            RationalDensity gamma(static_cast<std::uint64_t>(num), static_cast<std::uint64_t>(den));
            std::int64_t k = static_cast<std::int64_t>(gamma.round_mul(static_cast<std::uint64_t>(n)));
            double residual = log_binom(n, k) - stirling_log_binom(n, gamma);
            worst = std::max(worst, std::fabs(residual));
        }
    }
    res.pass = worst <= 1.5;
    res.detail = fmt("max |residual| = %.4f (cap 1.5)", worst);
    return res;
}

CheckResult check_predict_grid() {
    CheckResult res{"predict-reference-grid", true, ""};
    double worst = 0.0;
    for (const auto& row : kReferenceGrid) {
        ModelParams params{RationalDensity::parse(row.gamma), row.p, row.n};
        double got = predict_omega(params).omega_th;
        double dev = std::fabs(got - row.omega_th);
        worst = std::max(worst, dev);
        if (dev > 0.005) res.pass = false;
    }
    res.detail = fmt("27 rows, max |omega_th - reference| = %.5f (cap 0.005)", worst);
    return res;
}

CheckResult check_hypergeom_normalization() {
    CheckResult res{"hypergeom-normalization", true, ""};
    RationalDensity p(3, 10);
    double worst = 0.0;
    for (std::int64_t k : {12, 30, 60}) {
        for (std::int64_t ell : {std::int64_t{2}, k / 2, k - 1}) {
            for (auto gd : {std::pair<int, int>{1, 2}, {3, 5}, {9, 10}}) {
                OverlapPattern pat = OverlapPattern::make(
                    k, ell, RationalDensity(static_cast<std::uint64_t>(gd.first), static_cast<std::uint64_t>(gd.second)), p);
                double sum = 0.0;
                for (std::int64_t L = 0; L <= pat.T; ++L)
                    sum += overlap_edge_logprob(pat, L).value();
                worst = std::max(worst, std::fabs(sum - 1.0));
            }
        }
    }
    for (auto [n, k] : {std::pair<std::int64_t, std::int64_t>{100, 10}, {1000, 30}}) {
        double sum = 0.0;
        for (std::int64_t ell = 0; ell <= k; ++ell)
            sum += overlap_size_logweight(n, k, ell).value();
        worst = std::max(worst, std::fabs(sum - 1.0));
    }
    if (worst > 1e-10) res.pass = false;

    // Exact Vandermonde identities in the rational mode (S <= 200).
    bool exact_ok = true;
    for (std::int64_t k : {8, 15, 20}) {
        for (std::int64_t ell = 2; ell <= k - 1; ++ell) {
            OverlapPattern pat = OverlapPattern::make(k, ell, RationalDensity(3, 5), p);
            BigUint total;
            for (std::int64_t L = std::max<std::int64_t>(0, pat.m - pat.R);
                 L <= std::min(pat.T, pat.m); ++L) {
                total += big_binom(static_cast<std::uint64_t>(pat.T), static_cast<std::uint64_t>(L)) *
                         big_binom(static_cast<std::uint64_t>(pat.R),
                                   static_cast<std::uint64_t>(pat.m - L));
            }
            if (!(total == big_binom(static_cast<std::uint64_t>(pat.S),
                                     static_cast<std::uint64_t>(pat.m))))
                exact_ok = false;
        }
    }
    {
        BigUint total;
        for (std::uint64_t ell = 0; ell <= 12; ++ell)
            total += big_binom(12, ell) * big_binom(88, 12 - ell);
        if (!(total == big_binom(100, 12))) exact_ok = false;
    }
    if (!exact_ok) res.pass = false;
    res.detail = fmt("max |sum - 1| = %.2e", worst) +
                 (exact_ok ? "; exact identities ok" : "; exact identities FAILED");
    return res;
}

CheckResult check_q_monotonicity() {
    CheckResult res{"overlap-ratio-monotone", true, ""};
    RationalDensity p(3, 10);
    int tested = 0;
    for (std::int64_t k : {11, 15, 20}) {
        for (std::int64_t ell = 2; ell <= std::min<std::int64_t>(10, k - 1); ++ell) {
            for (auto gd : {std::pair<int, int>{1, 2}, {3, 5}, {9, 10}}) {
                OverlapPattern pat = OverlapPattern::make(
                    k, ell, RationalDensity(static_cast<std::uint64_t>(gd.first), static_cast<std::uint64_t>(gd.second)), p);
                std::int64_t lo = std::max<std::int64_t>(0, pat.m - pat.R);
                std::int64_t hi = std::min(pat.T, pat.m);
                for (std::int64_t L = lo; L + 2 <= hi; ++L) {
                    Fraction64 q1 = overlap_ratio_q(pat, L);
                    Fraction64 q2 = overlap_ratio_q(pat, L + 1);
                    // exact cross-multiplied comparison q1 > q2
                    __int128 lhs = static_cast<__int128>(q1.num) * q2.den;
                    __int128 rhs = static_cast<__int128>(q2.num) * q1.den;
                    if (!(lhs > rhs)) res.pass = false;
                    ++tested;
                }
            }
        }
    }
    res.detail = fmt("%.0f successive-ratio pairs, all strictly decreasing", tested);
    return res;
}

CheckResult check_lemma5_inequalities() {
    CheckResult res{"variance-ratio-bounds", true, ""};
    // Exact-rational checks on small patterns.
    for (std::int64_t k : {8, 12, 16}) {
        for (std::int64_t ell = 3; ell <= k - 1; ++ell) {
            OverlapPattern pat = OverlapPattern::make(k, ell, RationalDensity(3, 5), RationalDensity(3, 10));
            std::int64_t mode = static_cast<std::int64_t>(pat.gamma.floor_mul(static_cast<std::uint64_t>(pat.T)));
            std::int64_t lo = std::max<std::int64_t>(0, pat.m - pat.R);
            if (mode < lo || mode > std::min(pat.T, pat.m)) continue;
            BigRat at_mode = exact_joint_over_point_sq(pat, mode);
            for (std::int64_t L = lo; L < mode; ++L) {
                if (!(exact_joint_over_point_sq(pat, L) <= at_mode)) res.pass = false;
            }
        }
    }
    // Log-space sweep at k = 60: below-mode monotone bound and the lambda cap
    // on successive ratios above the mode (valid when gamma*R >= 1).
    for (auto gd : {std::pair<int, int>{1, 2}, {3, 5}}) {
        RationalDensity gamma(static_cast<std::uint64_t>(gd.first), static_cast<std::uint64_t>(gd.second));
        RationalDensity p(3, 10);
        for (std::int64_t ell = 2; ell <= 59; ++ell) {
            OverlapPattern pat = OverlapPattern::make(60, ell, gamma, p);
            std::int64_t mode = static_cast<std::int64_t>(gamma.floor_mul(static_cast<std::uint64_t>(pat.T)));
            std::int64_t lo = std::max<std::int64_t>(0, pat.m - pat.R);
            std::int64_t hi = std::min(pat.T, pat.m);
            if (mode < lo || mode > hi) continue;
            double at_mode = log_joint_over_point_sq(pat, mode).log;
            double lambda_log = std::log(lambda_ratio_cap(pat));
            for (std::int64_t L = lo; L <= hi; ++L) {
                double cur = log_joint_over_point_sq(pat, L).log;
                if (L < mode && cur > at_mode + 1e-9) res.pass = false;
                if (L >= mode && L + 1 <= hi &&
                    static_cast<double>(pat.gamma.num()) * static_cast<double>(pat.R) >=
                        static_cast<double>(pat.gamma.den())) {
                    double next = log_joint_over_point_sq(pat, L + 1).log;
                    if (next - cur > lambda_log + 1e-9) res.pass = false;
                }
            }
        }
    }
    res.detail = "below-mode bound and lambda ratio cap hold on all sweeps";
    return res;
}

CheckResult check_flatness(VerifyLevel level, Seed seed) {
    CheckResult res{"flatness-sampling", true, ""};
    std::ostringstream detail;
    double f30 = sample_flat_fraction(30, RationalDensity(1, 2), 20, derive_seed(seed, 41, 0));
    detail << "k=30 fraction=" << f30;
    if (f30 != 1.0) res.pass = false;

    // Adversarial construction: all edges packed away from one isolated
    // vertex; the size-(k-1) subset then carries every edge.
    {
        int k = 100;
        std::int64_t m = RationalDensity(1, 2).ceil_mul(static_cast<std::uint64_t>(k) * (k - 1) / 2);
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < k - 1 && static_cast<std::int64_t>(edges.size()) < m; ++i)
            for (int j = i + 1; j < k - 1 && static_cast<std::int64_t>(edges.size()) < m; ++j)
                edges.emplace_back(i, j);
        Graph g = Graph::from_edges(k, edges);
        FlatnessReport rep = flatness_report(g, RationalDensity(1, 2));
        bool found99 = false;
        for (const auto& v : rep.violations)
            if (v.ell == 99) found99 = true;
        detail << "; packed-construction flat=" << rep.is_flat << " violation@99=" << found99;
        if (rep.is_flat || !found99 || !rep.edge_count_ok) res.pass = false;
    }

    if (level == VerifyLevel::Full) {
        double f150 = sample_flat_fraction(150, RationalDensity(1, 2), 60, derive_seed(seed, 42, 0));
        detail << "; k=150 fraction=" << f150;
        if (f150 < 0.8) res.pass = false;
    }
    res.detail = detail.str();
    return res;
}

CheckResult check_variance_trend() {
    CheckResult res{"variance-trend", true, ""};
    RationalDensity gamma(1, 2);
    RationalDensity p(1, 5);
    std::ostringstream detail;
    // Fixed k: the larger Theorem-1 candidate at the base of the grid. The
    // bound is huge where that k is supercritical (n = 1e4) and collapses as
    // n grows past the threshold.
    std::int64_t k = predict_omega(ModelParams{gamma, p.value(), 10000}).candidates.second;
    double prev = 1e300;
    for (double n : {1e4, 1e6, 1e8}) {
        std::int64_t ni = static_cast<std::int64_t>(n);
        double total = variance_ratio_profile(ni, k, gamma, p).total;
        detail << "n=" << ni << " k=" << k << " F=" << total << "; ";
        if (!(total < prev)) res.pass = false;
        prev = total;
    }
    double numeric = variance_ratio_profile(100, 5, RationalDensity(3, 5), RationalDensity(3, 10)).total;
    BigRat exact = exact_variance_total(100, 5, RationalDensity(3, 5), RationalDensity(3, 10));
    double rel = std::fabs(numeric - exact.value()) / exact.value();
    detail << "small-S oracle rel err " << rel;
    if (rel > 1e-6) res.pass = false;
    res.detail = detail.str();
    return res;
}

CheckResult check_oracle_equivalence(VerifyLevel level, Seed seed) {
    CheckResult res{"solver-oracle-equivalence", true, ""};
    const int instances = level == VerifyLevel::Full ? 200 : 60;
    const double ps[] = {0.2, 0.5};
    const std::pair<int, int> gammas[] = {{1, 2}, {3, 5}, {3, 4}, {9, 10}};
    int mismatches = 0;
    for (int t = 0; t < instances; ++t) {
        int n = 6 + t % 9;
        double p = ps[(t / 9) % 2];
        RationalDensity gamma(static_cast<std::uint64_t>(gammas[t % 4].first),
                              static_cast<std::uint64_t>(gammas[t % 4].second));
        Graph g = gen_gnp(n, p, derive_seed(seed, 7, static_cast<std::uint64_t>(t)));
        SolveOutcome exact = brute_force_omega(g, gamma);
        SolveOutcome got = omega_gamma(g, gamma);
        if (got.status != SolveStatus::Solved || got.omega != exact.omega ||
            !is_quasi_clique(g, got.witness, gamma) ||
            got.witness.count() != got.omega)
            ++mismatches;
    }
    res.pass = mismatches == 0;
    res.detail = fmt("%.0f instances, %.0f mismatches", instances, mismatches);
    return res;
}

}  // namespace

VerifySummary verify_suite(VerifyLevel level, Seed seed) {
    VerifySummary summary;
    summary.checks.push_back(check_lemma1_exponent());
    summary.checks.push_back(check_stirling_residual());
    summary.checks.push_back(check_predict_grid());
    summary.checks.push_back(check_hypergeom_normalization());
    summary.checks.push_back(check_q_monotonicity());
    summary.checks.push_back(check_lemma5_inequalities());
    summary.checks.push_back(check_flatness(level, seed));
    if (level == VerifyLevel::Full) summary.checks.push_back(check_variance_trend());
    summary.checks.push_back(check_oracle_equivalence(level, seed));
    return summary;
}

}  // namespace qclique
