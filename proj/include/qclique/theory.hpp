#pragma once

#include <cstdint>
#include <utility>

#include "qclique/logvalue.hpp"
#include "qclique/rational.hpp"

namespace qclique {

// Parameter bundle for the predictor; requires 0 < p < gamma < 1.
struct ModelParams {
    RationalDensity gamma;
    double p = 0.0;
    std::int64_t n = 0;
};

// Output of predict_omega: the rate alpha, the density-threshold location
// omega_th, the two integer candidates around it, and the first-moment upper
// bound kappa = omega_th + 1/2 + epsilon.
struct Prediction {
    double alpha = 0.0;
    double omega_th = 0.0;
    std::pair<std::int64_t, std::int64_t> candidates{0, 0};
    double kappa = 0.0;
    double epsilon = 0.0;
    // omega_th landing exactly on an integer leaves "the two closest
    // integers" ambiguous; candidates then degenerate to (omega_th, omega_th)
    // and this flag is raised instead of guessing.
    bool omega_th_integral = false;
};

inline constexpr double kDefaultKappaEpsilon = 0.1;

// Relative-entropy rate alpha(gamma,p) = g*ln(g/p) + (1-g)*ln((1-g)/(1-p)).
// Natural logs throughout. Zero iff gamma == p.
double alpha(const RationalDensity& gamma, double p);

// Binary entropy h(gamma) in nats.
double binary_entropy(const RationalDensity& gamma);

// ln C(n,k) via lgamma; relative error <= 1e-9 for n <= 10^6.
double log_binom(std::int64_t n, std::int64_t k);

// Explicit part of the Stirling estimate for ln C(n, gamma*n):
// n*h(gamma) - (1/2)*ln(n*gamma*(1-gamma)). The O(1) residual is the
// caller's concern.
double stirling_log_binom(std::int64_t n, const RationalDensity& gamma);

// ln P(Bi(N,p) = t) with exact integer exponents; zero flag off support.
LogValue binom_log_point_at(std::int64_t N, double p, std::int64_t t);

// ln P(Bi(N,p) >= t), summed in log space from the largest term downward;
// terms more than 60 nats below the running maximum are dropped (below
// double resolution). Requires t above the mode, which holds for t >= ceil(g*N)
// with g > p.
LogValue binom_log_tail_at(std::int64_t N, double p, std::int64_t t);

struct BinomLogProbs {
    LogValue point;  // ln P(Bi(N,p) = ceil(gamma*N))
    LogValue tail;   // ln P(Bi(N,p) >= gamma*N)
};

// Both quantities at the density threshold t = ceil(gamma*N); 0 < p < gamma < 1.
BinomLogProbs binom_log_probs(std::int64_t N, double p, const RationalDensity& gamma);

// ln E X_k where X_k counts k-subsets inducing at least ceil(gamma*C(k,2))
// edges: log_binom(n,k) + tail at the threshold.
LogValue expected_log_xk(std::int64_t n, std::int64_t k, const RationalDensity& gamma, double p);

// Explicit lower-bound surrogate for ln E Z_k (Z_k = number of k-subsets
// inducing exactly the threshold edge count, restricted to the flat class):
// log_binom(n,k) + point at the threshold. The 1+o(1) flatness factor is not
// computed.
LogValue expected_log_zk(std::int64_t n, std::int64_t k, const RationalDensity& gamma, double p);

// First-moment cut-off kappa = (2/alpha)(ln n - ln ln n + ln(e*alpha/2)) + 1 + eps.
// Equals omega_th + 1/2 + eps exactly.
double kappa_upper(const ModelParams& params, double eps);

// The two-point predictor: omega_th = (2/alpha)(ln n - ln ln n + ln(e*alpha/2)) + 1/2
// plus the integer candidate pair (floor, ceil).
Prediction predict_omega(const ModelParams& params, double eps = kDefaultKappaEpsilon);

}  // namespace qclique
