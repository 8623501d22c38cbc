#pragma once

#include <cstdint>
#include <map>

#include "qclique/bigint.hpp"
#include "qclique/logvalue.hpp"
#include "qclique/rational.hpp"

namespace qclique {

// Parameter bundle for all pairwise-overlap probability formulas: two
// k-subsets sharing ell vertices, S = C(k,2) pairs each, T = C(ell,2) shared
// pairs, R = S - T private pairs, and m = ceil(gamma*S) the edge quota.
struct OverlapPattern {
    std::int64_t k = 0;
    std::int64_t ell = 0;
    std::int64_t S = 0;
    std::int64_t T = 0;
    std::int64_t R = 0;
    std::int64_t m = 0;
    RationalDensity gamma;
    RationalDensity p;

    // ell in [0, k-1]; ell <= 1 is the degenerate diagnostic regime (T = 0).
    static OverlapPattern make(std::int64_t k, std::int64_t ell, const RationalDensity& gamma,
                               const RationalDensity& p);

    double p_value() const { return p.value(); }
};

// Exact small fraction (fits 64-bit for every pattern this project touches).
struct Fraction64 {
    std::int64_t num = 0;
    std::int64_t den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// Flatness slack D_k(ell) = min(T, S-T) * ell^{-1/2} * ln k. Natural log.
double flatness_slack(std::int64_t k, std::int64_t ell);

// Hypergeometric law of the overlap edge count, conditioned on the k-graph
// having exactly m edges: P(e(A) = L) = C(T,L) C(R,m-L) / C(S,m).
// Off-support L yields the zero flag.
LogValue overlap_edge_logprob(const OverlapPattern& pat, std::int64_t L);

// Successive-ratio Q(L) = P(e(A)=L+1) / P(e(A)=L), exact:
// ((T-L)/(L+1)) * ((m-L)/(R-m+L+1)). Requires both points in support.
Fraction64 overlap_ratio_q(const OverlapPattern& pat, std::int64_t L);

// Diagnostic: does P(e(A) = ceil(gamma*T)+r) <= exp(-c r(r-1) / (2 min(R,T)))
// hold, with c = 1/max(gamma, 1-gamma)? Derived for large k; small patterns
// may fail without significance.
bool deviation_bound_holds(const OverlapPattern& pat, std::int64_t r);

// Joint probability that two overlapping subsets each induce exactly m edges
// while the shared part induces L:
// C(T,L) C(R,m-L)^2 p^{2m-L} (1-p)^{2(S-m)-T+L}.
LogValue joint_edge_logprob(const OverlapPattern& pat, std::int64_t L);

// ln of R_ell(L) = joint / point^2, the variance integrand.
LogValue log_joint_over_point_sq(const OverlapPattern& pat, std::int64_t L);
double joint_over_point_sq(const OverlapPattern& pat, std::int64_t L);

// lambda = 2 * (gamma/(1-gamma)) * ((1-p)/p): cap on successive R-ratios
// above the mean overlap density.
double lambda_ratio_cap(const OverlapPattern& pat);

// Hypergeometric overlap-size weight t(ell) = C(k,ell) C(n-k,k-ell) / C(n,k).
LogValue overlap_size_logweight(std::int64_t n, std::int64_t k, std::int64_t ell);

// Per-overlap-size bounds on the variance-to-mean-squared ratio and their
// sum: per_ell(ell) = t(ell) * sum_{L <= gamma*T + D_k(ell)} R_ell(L).
struct VarianceProfile {
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::map<std::int64_t, double> per_ell;
    double total = 0.0;
};

VarianceProfile variance_ratio_profile(std::int64_t n, std::int64_t k,
                                       const RationalDensity& gamma, const RationalDensity& p);

// Upper limit of the L-sum: floor(gamma*T + D), with the rational part exact.
std::int64_t variance_l_limit(const OverlapPattern& pat, double slack);

// ---- Exact-rational mirror of the formulas above (oracle path) ----
// Available whenever S <= 200; the log-space path is tested against it.

BigRat exact_overlap_edge_prob(const OverlapPattern& pat, std::int64_t L);
BigRat exact_joint_edge_prob(const OverlapPattern& pat, std::int64_t L);
BigRat exact_joint_over_point_sq(const OverlapPattern& pat, std::int64_t L);
BigRat exact_overlap_size_weight(std::int64_t n, std::int64_t k, std::int64_t ell);
BigRat exact_variance_total(std::int64_t n, std::int64_t k, const RationalDensity& gamma,
                            const RationalDensity& p);

}  // namespace qclique
