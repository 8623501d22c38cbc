#include "qclique/overlap.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qclique/theory.hpp"

namespace qclique {

namespace {

void require_prob(const RationalDensity& p) {
    if (p.num() == 0 || p.num() == p.den()) throw std::invalid_argument("p must be in (0,1)");
}

bool in_overlap_support(const OverlapPattern& pat, std::int64_t L) {
    return L >= 0 && L <= pat.T && L <= pat.m && pat.m - L <= pat.R;
}

}  // namespace

OverlapPattern OverlapPattern::make(std::int64_t k, std::int64_t ell, const RationalDensity& gamma,
                                    const RationalDensity& p) {
    if (k < 2) throw std::invalid_argument("OverlapPattern: k must be >= 2");
    if (ell < 0 || ell > k - 1) throw std::invalid_argument("OverlapPattern: ell out of [0, k-1]");
    if (gamma.num() == 0) throw std::invalid_argument("OverlapPattern: gamma must be positive");
    require_prob(p);
    OverlapPattern pat;
    pat.k = k;
    pat.ell = ell;
    pat.S = k * (k - 1) / 2;
    pat.T = ell * (ell - 1) / 2;
    pat.R = pat.S - pat.T;
    pat.m = static_cast<std::int64_t>(gamma.ceil_mul(static_cast<std::uint64_t>(pat.S)));
    pat.gamma = gamma;
    pat.p = p;
    return pat;
}

double flatness_slack(std::int64_t k, std::int64_t ell) {
    if (k < 3) throw std::invalid_argument("flatness_slack: k must be >= 3");
    if (ell < 2 || ell > k - 1) throw std::invalid_argument("flatness_slack: ell out of [2, k-1]");
    std::int64_t s = k * (k - 1) / 2;
    std::int64_t t = ell * (ell - 1) / 2;
    double scale = static_cast<double>(std::min(t, s - t));
    return scale * std::log(static_cast<double>(k)) / std::sqrt(static_cast<double>(ell));
}

LogValue overlap_edge_logprob(const OverlapPattern& pat, std::int64_t L) {
    if (!in_overlap_support(pat, L)) return LogValue::zero();
    return LogValue::from_log(log_binom(pat.T, L) + log_binom(pat.R, pat.m - L) -
                              log_binom(pat.S, pat.m));
}

Fraction64 overlap_ratio_q(const OverlapPattern& pat, std::int64_t L) {
    if (L < 0 || L >= pat.T || !in_overlap_support(pat, L) || !in_overlap_support(pat, L + 1))
        throw std::domain_error("overlap_ratio_q: L or L+1 out of support");
    return Fraction64{(pat.T - L) * (pat.m - L), (L + 1) * (pat.R - pat.m + L + 1)};
}

bool deviation_bound_holds(const OverlapPattern& pat, std::int64_t r) {
    if (r < 1) throw std::invalid_argument("deviation_bound_holds: r must be >= 1");
    std::int64_t L = static_cast<std::int64_t>(pat.gamma.ceil_mul(static_cast<std::uint64_t>(pat.T))) + r;
    if (L > pat.T) throw std::invalid_argument("deviation_bound_holds: ceil(gamma*T)+r above T");
    double g = pat.gamma.value();
    double c = 1.0 / std::max(g, 1.0 - g);
    double rhs = -c * static_cast<double>(r) * static_cast<double>(r - 1) /
                 (2.0 * static_cast<double>(std::min(pat.R, pat.T)));
    LogValue lhs = overlap_edge_logprob(pat, L);
    if (lhs.is_zero) return true;
    return lhs.log <= rhs;
}

LogValue joint_edge_logprob(const OverlapPattern& pat, std::int64_t L) {
    if (!in_overlap_support(pat, L)) return LogValue::zero();
    double lp = std::log(pat.p_value());
    double lq = std::log1p(-pat.p_value());
    std::int64_t p_exp = 2 * pat.m - L;
    std::int64_t q_exp = 2 * (pat.S - pat.m) - pat.T + L;  // >= S - m in support
    return LogValue::from_log(log_binom(pat.T, L) + 2.0 * log_binom(pat.R, pat.m - L) +
                              static_cast<double>(p_exp) * lp + static_cast<double>(q_exp) * lq);
}

LogValue log_joint_over_point_sq(const OverlapPattern& pat, std::int64_t L) {
    if (!in_overlap_support(pat, L)) return LogValue::zero();
    double lp = std::log(pat.p_value());
    double lq = std::log1p(-pat.p_value());
    return LogValue::from_log(log_binom(pat.T, L) + 2.0 * log_binom(pat.R, pat.m - L) -
                              2.0 * log_binom(pat.S, pat.m) - static_cast<double>(L) * lp +
                              static_cast<double>(L - pat.T) * lq);
}

double joint_over_point_sq(const OverlapPattern& pat, std::int64_t L) {
    LogValue lv = log_joint_over_point_sq(pat, L);
    return lv.is_zero ? 0.0 : std::exp(lv.log);
}

double lambda_ratio_cap(const OverlapPattern& pat) {
    double g = pat.gamma.value();
    if (g >= 1.0) throw std::invalid_argument("lambda_ratio_cap: gamma must be < 1");
    double p = pat.p_value();
    return 2.0 * (g / (1.0 - g)) * ((1.0 - p) / p);
}

LogValue overlap_size_logweight(std::int64_t n, std::int64_t k, std::int64_t ell) {
    if (ell < 0 || ell > k || k > n) throw std::invalid_argument("overlap_size_logweight: bad sizes");
    if (k - ell > n - k) return LogValue::zero();
    return LogValue::from_log(log_binom(k, ell) + log_binom(n - k, k - ell) - log_binom(n, k));
}

std::int64_t variance_l_limit(const OverlapPattern& pat, double slack) {
    std::int64_t base = static_cast<std::int64_t>(pat.gamma.floor_mul(static_cast<std::uint64_t>(pat.T)));
    unsigned __int128 prod = static_cast<unsigned __int128>(pat.gamma.num()) *
                             static_cast<unsigned __int128>(pat.T);
    double frac = static_cast<double>(static_cast<std::uint64_t>(prod % pat.gamma.den())) /
                  static_cast<double>(pat.gamma.den());
    return base + static_cast<std::int64_t>(std::floor(frac + slack));
}

VarianceProfile variance_ratio_profile(std::int64_t n, std::int64_t k,
                                       const RationalDensity& gamma, const RationalDensity& p) {
    if (k < 3 || k >= n) throw std::invalid_argument("variance_ratio_profile: requires 3 <= k < n");
    if (!(p < gamma)) throw std::invalid_argument("variance_ratio_profile: requires p < gamma");
    if (gamma.num() == gamma.den()) throw std::invalid_argument("variance_ratio_profile: gamma must be < 1");
    VarianceProfile prof;
    prof.n = n;
    prof.k = k;
    for (std::int64_t ell = 2; ell <= k - 1; ++ell) {
        OverlapPattern pat = OverlapPattern::make(k, ell, gamma, p);
        double slack = flatness_slack(k, ell);
        std::int64_t lmin = std::max<std::int64_t>(0, pat.m - pat.R);
        std::int64_t lmax = std::min({variance_l_limit(pat, slack), pat.T, pat.m});
        LogValue weight = overlap_size_logweight(n, k, ell);
        double contribution = 0.0;
        if (!weight.is_zero && lmax >= lmin) {
            LogSumAccumulator acc;
            for (std::int64_t L = lmin; L <= lmax; ++L) acc.add(log_joint_over_point_sq(pat, L));
            LogValue sum = acc.result();
            if (!sum.is_zero) contribution = std::exp(weight.log + sum.log);
        }
        prof.per_ell[ell] = contribution;
        prof.total += contribution;
    }
    return prof;
}

// ---- exact-rational path ----

namespace {

BigUint big_pow_u64(std::uint64_t base, std::uint64_t exp) { return BigUint::pow(base, exp); }

void require_exact_scale(const OverlapPattern& pat) {
    if (pat.S > 200) throw std::invalid_argument("exact overlap path requires S <= 200");
}

}  // namespace

BigRat exact_overlap_edge_prob(const OverlapPattern& pat, std::int64_t L) {
    require_exact_scale(pat);
    if (!in_overlap_support(pat, L)) return BigRat{BigUint(), BigUint(1)};
    BigUint num = big_binom(static_cast<std::uint64_t>(pat.T), static_cast<std::uint64_t>(L)) *
                  big_binom(static_cast<std::uint64_t>(pat.R), static_cast<std::uint64_t>(pat.m - L));
    BigUint den = big_binom(static_cast<std::uint64_t>(pat.S), static_cast<std::uint64_t>(pat.m));
    return BigRat{num, den};
}

BigRat exact_joint_edge_prob(const OverlapPattern& pat, std::int64_t L) {
    require_exact_scale(pat);
    if (!in_overlap_support(pat, L)) return BigRat{BigUint(), BigUint(1)};
    std::uint64_t np = pat.p.num();
    std::uint64_t dp = pat.p.den();
    std::uint64_t nq = dp - np;
    std::uint64_t p_exp = static_cast<std::uint64_t>(2 * pat.m - L);
    std::uint64_t q_exp = static_cast<std::uint64_t>(2 * (pat.S - pat.m) - pat.T + L);
    BigUint priv = big_binom(static_cast<std::uint64_t>(pat.R), static_cast<std::uint64_t>(pat.m - L));
    BigUint num = big_binom(static_cast<std::uint64_t>(pat.T), static_cast<std::uint64_t>(L)) *
                  priv * priv * big_pow_u64(np, p_exp) * big_pow_u64(nq, q_exp);
    BigUint den = big_pow_u64(dp, static_cast<std::uint64_t>(2 * pat.S - pat.T));
    return BigRat{num, den};
}

BigRat exact_joint_over_point_sq(const OverlapPattern& pat, std::int64_t L) {
    require_exact_scale(pat);
    if (!in_overlap_support(pat, L)) return BigRat{BigUint(), BigUint(1)};
    std::uint64_t np = pat.p.num();
    std::uint64_t dp = pat.p.den();
    std::uint64_t nq = dp - np;
    BigUint priv = big_binom(static_cast<std::uint64_t>(pat.R), static_cast<std::uint64_t>(pat.m - L));
    BigUint choose_all = big_binom(static_cast<std::uint64_t>(pat.S), static_cast<std::uint64_t>(pat.m));
    BigUint num = big_binom(static_cast<std::uint64_t>(pat.T), static_cast<std::uint64_t>(L)) *
                  priv * priv * big_pow_u64(dp, static_cast<std::uint64_t>(pat.T));
    BigUint den = choose_all * choose_all * big_pow_u64(np, static_cast<std::uint64_t>(L)) *
                  big_pow_u64(nq, static_cast<std::uint64_t>(pat.T - L));
    return BigRat{num, den};
}

BigRat exact_overlap_size_weight(std::int64_t n, std::int64_t k, std::int64_t ell) {
    if (ell < 0 || ell > k || k > n) throw std::invalid_argument("exact_overlap_size_weight: bad sizes");
    if (k - ell > n - k) return BigRat{BigUint(), BigUint(1)};
    BigUint num = big_binom(static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(ell)) *
                  big_binom(static_cast<std::uint64_t>(n - k), static_cast<std::uint64_t>(k - ell));
    return BigRat{num, big_binom(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k))};
}

BigRat exact_variance_total(std::int64_t n, std::int64_t k, const RationalDensity& gamma,
                            const RationalDensity& p) {
    if (k < 3 || k >= n) throw std::invalid_argument("exact_variance_total: requires 3 <= k < n");
    BigRat total{BigUint(), BigUint(1)};
    for (std::int64_t ell = 2; ell <= k - 1; ++ell) {
        OverlapPattern pat = OverlapPattern::make(k, ell, gamma, p);
        double slack = flatness_slack(k, ell);
        std::int64_t lmin = std::max<std::int64_t>(0, pat.m - pat.R);
        std::int64_t lmax = std::min({variance_l_limit(pat, slack), pat.T, pat.m});
        BigRat weight = exact_overlap_size_weight(n, k, ell);
        if (weight.is_zero() || lmax < lmin) continue;
        BigRat inner{BigUint(), BigUint(1)};
        for (std::int64_t L = lmin; L <= lmax; ++L) inner = inner + exact_joint_over_point_sq(pat, L);
        total = total + weight * inner;
    }
    return total;
}

}  // namespace qclique
