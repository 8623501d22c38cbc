#include "qclique/theory.hpp"

#include <cmath>
#include <stdexcept>

#include "qclique/graph.hpp"

namespace qclique {

namespace {

void require_open_unit(double x, const char* what) {
    if (!(x > 0.0 && x < 1.0)) throw std::invalid_argument(std::string(what) + " must be in (0,1)");
}

void require_params(const ModelParams& params) {
    double g = params.gamma.value();
    require_open_unit(params.p, "p");
    require_open_unit(g, "gamma");
    if (!(params.p < g)) throw std::invalid_argument("predictor requires p < gamma");
    if (params.n < 3) throw std::invalid_argument("predictor requires n >= 3");
}

double omega_th_value(double a, double n) {
    return 2.0 / a * (std::log(n) - std::log(std::log(n)) + std::log(std::exp(1.0) * a / 2.0)) + 0.5;
}

// Terms of the upper tail more than this far below the max are beneath
// double resolution.
constexpr double kTailCutoffNats = 60.0;

}  // namespace

double alpha(const RationalDensity& gamma, double p) {
    double g = gamma.value();
    require_open_unit(g, "gamma");
    require_open_unit(p, "p");
    return g * std::log(g / p) + (1.0 - g) * std::log((1.0 - g) / (1.0 - p));
}

double binary_entropy(const RationalDensity& gamma) {
    double g = gamma.value();
    require_open_unit(g, "gamma");
    return -g * std::log(g) - (1.0 - g) * std::log(1.0 - g);
}

double log_binom(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) throw std::invalid_argument("log_binom: k out of range");
    return std::lgamma(static_cast<double>(n) + 1.0) -
           std::lgamma(static_cast<double>(k) + 1.0) -
           std::lgamma(static_cast<double>(n - k) + 1.0);
}

double stirling_log_binom(std::int64_t n, const RationalDensity& gamma) {
    if (n < 2) throw std::invalid_argument("stirling_log_binom: n must be >= 2");
    double g = gamma.value();
    require_open_unit(g, "gamma");
    double nd = static_cast<double>(n);
    return nd * binary_entropy(gamma) - 0.5 * std::log(nd * g * (1.0 - g));
}

LogValue binom_log_point_at(std::int64_t N, double p, std::int64_t t) {
    if (N < 1) throw std::invalid_argument("binom_log_point_at: N must be >= 1");
    require_open_unit(p, "p");
    if (t < 0 || t > N) return LogValue::zero();
    return LogValue::from_log(log_binom(N, t) + static_cast<double>(t) * std::log(p) +
                              static_cast<double>(N - t) * std::log1p(-p));
}

LogValue binom_log_tail_at(std::int64_t N, double p, std::int64_t t) {
    if (N < 1) throw std::invalid_argument("binom_log_tail_at: N must be >= 1");
    require_open_unit(p, "p");
    if (t <= 0) return LogValue::from_log(0.0);
    if (t > N) return LogValue::zero();
    // pmf is non-increasing from t on when t is above the mode; accumulate
    // relative to the leading term and stop once terms stop mattering.
    double lead = binom_log_point_at(N, p, t).log;
    double sum = 1.0;
    for (std::int64_t r = t + 1; r <= N; ++r) {
        double lr = binom_log_point_at(N, p, r).log;
        if (lr < lead - kTailCutoffNats) break;
        sum += std::exp(lr - lead);
    }
    return LogValue::from_log(lead + std::log(sum));
}

BinomLogProbs binom_log_probs(std::int64_t N, double p, const RationalDensity& gamma) {
    double g = gamma.value();
    require_open_unit(g, "gamma");
    if (p > g) throw std::invalid_argument("binom_log_probs: requires p <= gamma");
    std::int64_t t = static_cast<std::int64_t>(gamma.ceil_mul(static_cast<std::uint64_t>(N)));
    return BinomLogProbs{binom_log_point_at(N, p, t), binom_log_tail_at(N, p, t)};
}

namespace {

LogValue expected_log_count(std::int64_t n, std::int64_t k, const RationalDensity& gamma,
                            double p, bool tail) {
    if (k < 2 || k > n) throw std::invalid_argument("expected count: k out of range");
    require_open_unit(p, "p");
    std::int64_t s = k * (k - 1) / 2;
    std::int64_t t = quasi_threshold(k, gamma);
    double subsets = log_binom(n, k);
    LogValue prob = tail ? binom_log_tail_at(s, p, t) : binom_log_point_at(s, p, t);
    if (prob.is_zero) return LogValue::zero();
    return LogValue::from_log(subsets + prob.log);
}

}  // namespace

LogValue expected_log_xk(std::int64_t n, std::int64_t k, const RationalDensity& gamma, double p) {
    return expected_log_count(n, k, gamma, p, /*tail=*/true);
}

LogValue expected_log_zk(std::int64_t n, std::int64_t k, const RationalDensity& gamma, double p) {
    return expected_log_count(n, k, gamma, p, /*tail=*/false);
}

double kappa_upper(const ModelParams& params, double eps) {
    require_params(params);
    if (eps < 0.0) throw std::invalid_argument("kappa_upper: eps must be >= 0");
    double a = alpha(params.gamma, params.p);
    return omega_th_value(a, static_cast<double>(params.n)) + 0.5 + eps;
}

Prediction predict_omega(const ModelParams& params, double eps) {
    require_params(params);
    Prediction out;
    out.alpha = alpha(params.gamma, params.p);
    out.omega_th = omega_th_value(out.alpha, static_cast<double>(params.n));
    out.epsilon = eps;
    out.kappa = out.omega_th + 0.5 + eps;
    double fl = std::floor(out.omega_th);
    if (out.omega_th == fl) {
        out.omega_th_integral = true;
        out.candidates = {static_cast<std::int64_t>(fl), static_cast<std::int64_t>(fl)};
    } else {
        out.candidates = {static_cast<std::int64_t>(fl), static_cast<std::int64_t>(fl) + 1};
    }
    return out;
}

}  // namespace qclique
