#include <doctest.h>

#include <bit>
#include <cmath>
#include <utility>
#include <vector>

#include "qclique/bigint.hpp"
#include "qclique/graph.hpp"
#include "qclique/reference_grid.hpp"
#include "qclique/theory.hpp"

using namespace qclique;

namespace {

// Independent long-double evaluation used to pin the frozen constants below.
long double alpha_ref(long double g, long double p) {
    return g * std::log(g / p) + (1.0L - g) * std::log((1.0L - g) / (1.0L - p));
}

}  // namespace

TEST_CASE("alpha: identity, frozen values, monotonicity") {
    CHECK(alpha(RationalDensity(1, 5), 0.2) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(alpha(RationalDensity(1, 2), 0.2) == doctest::Approx(0.22314355131420976).epsilon(1e-12));
    CHECK(alpha(RationalDensity(9, 10), 0.2) == doctest::Approx(1.1457255029306632).epsilon(1e-12));
    CHECK(alpha(RationalDensity(3, 5), 0.3) == doctest::Approx(0.19204199316179815).epsilon(1e-12));
    CHECK(alpha(RationalDensity(3, 4), 0.3) ==
          doctest::Approx(static_cast<double>(alpha_ref(0.75L, 0.3L))).epsilon(1e-12));
    CHECK_THROWS(alpha(RationalDensity(0, 1), 0.3));
    CHECK_THROWS(alpha(RationalDensity(1, 1), 0.3));
    CHECK_THROWS(alpha(RationalDensity(1, 2), 0.0));

    // alpha > 0 off the diagonal and strictly increasing in gamma on (p, 1).
    double p = 0.3;
    double prev = 0.0;
    for (int num = 31; num <= 99; num += 2) {
        double cur = alpha(RationalDensity(static_cast<std::uint64_t>(num), 100), p);
        CHECK(cur > 0.0);
        CHECK(cur > prev);
        prev = cur;
    }
}

TEST_CASE("binary entropy") {
    CHECK(binary_entropy(RationalDensity(1, 2)) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
    CHECK(binary_entropy(RationalDensity(3, 10)) == doctest::Approx(0.6108643020548935).epsilon(1e-12));
    for (int num = 1; num <= 9; ++num) {
        CHECK(binary_entropy(RationalDensity(static_cast<std::uint64_t>(num), 10)) ==
              doctest::Approx(binary_entropy(RationalDensity(static_cast<std::uint64_t>(10 - num), 10)))
                  .epsilon(1e-13));
    }
}

TEST_CASE("log_binom against exact integers") {
    CHECK(log_binom(10, 3) == doctest::Approx(std::log(120.0)).epsilon(1e-12));
    CHECK(log_binom(10, 0) == 0.0);
    CHECK(log_binom(10, 10) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(log_binom(52, 5) == doctest::Approx(big_binom(52, 5).log()).epsilon(1e-12));
    CHECK(log_binom(52, 5) == doctest::Approx(14.77062192297037).epsilon(1e-12));
    CHECK(log_binom(1000, 300) == doctest::Approx(big_binom(1000, 300).log()).epsilon(1e-11));
    CHECK_THROWS(log_binom(5, 6));
    CHECK_THROWS(log_binom(5, -1));

    // Relative-accuracy contract at large n. Independent oracle: compensated
    // long-double sum of ln((n-i)/(i+1)), rounding error ~3e-14 relative.
    {
        const std::int64_t n = 1000000, k = 333333;
        long double sum = 0.0L, comp = 0.0L;
        for (std::int64_t i = 0; i < k; ++i) {
            long double term = std::log(static_cast<long double>(n - i)) -
                               std::log(static_cast<long double>(i + 1));
            long double y = term - comp;
            long double t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
        CHECK(std::fabs(log_binom(n, k) - static_cast<double>(sum)) <= 1e-9 * static_cast<double>(sum));
        CHECK(std::fabs(log_binom(100000, 50000) - big_binom(100000, 50000).log()) <=
              1e-9 * big_binom(100000, 50000).log());
    }
}

TEST_CASE("stirling estimate and residual window") {
    CHECK(stirling_log_binom(1000, RationalDensity(3, 10)) ==
          doctest::Approx(608.1907482895348).epsilon(1e-12));

    double r1 = big_binom(1000, 300).log() - stirling_log_binom(1000, RationalDensity(3, 10));
    CHECK(r1 >= -1.5);
    CHECK(r1 <= 1.5);
    double r2 = big_binom(10000, 5000).log() - stirling_log_binom(10000, RationalDensity(1, 2));
    CHECK(r2 >= -1.5);
    CHECK(r2 <= 1.5);
    // The theoretical residual is about -ln(2*pi)/2 = -0.9189.
    CHECK(r2 == doctest::Approx(-0.5 * std::log(2.0 * 3.14159265358979323846)).epsilon(1e-3));
}

TEST_CASE("binomial point and tail probabilities") {
    // P(Bi(4,1/2) = 2) = 6/16.
    auto probs4 = binom_log_probs(4, 0.5, RationalDensity(1, 2));
    CHECK(probs4.point.log == doctest::Approx(std::log(0.375)).epsilon(1e-12));
    // P(Bi(3,1/2) >= 1.8) = P(>= 2) = 4/8.
    auto probs3 = binom_log_probs(3, 0.5, RationalDensity(3, 5));
    CHECK(probs3.tail.log == doctest::Approx(std::log(0.5)).epsilon(1e-12));
    // P(Bi(10,0.3) = 6) = C(10,6) 0.3^6 0.7^4 = 0.036756909.
    auto probs10 = binom_log_probs(10, 0.3, RationalDensity(3, 5));
    CHECK(probs10.point.log == doctest::Approx(std::log(0.036756909)).epsilon(1e-9));

    // Sandwich: point <= tail <= log(N+1) + point for gamma > p.
    for (std::int64_t n : {10, 100, 1000}) {
        for (auto gd : {std::pair<int, int>{1, 2}, {3, 5}, {9, 10}}) {
            RationalDensity gamma(static_cast<std::uint64_t>(gd.first), static_cast<std::uint64_t>(gd.second));
            auto probs = binom_log_probs(n, 0.3, gamma);
            CHECK(probs.point.log <= probs.tail.log + 1e-12);
            CHECK(probs.tail.log <= std::log(static_cast<double>(n + 1)) + probs.point.log + 1e-12);
        }
    }

    // Exponent convergence: |(-point/N) - alpha| <= 2 ln N / N, decreasing.
    RationalDensity gamma(3, 5);
    double a = alpha(gamma, 0.3);
    double prev = 1e9;
    for (std::int64_t n : {100, 1000, 10000}) {
        double dev = std::fabs(-binom_log_probs(n, 0.3, gamma).point.log / static_cast<double>(n) - a);
        CHECK(dev <= 2.0 * std::log(static_cast<double>(n)) / static_cast<double>(n));
        CHECK(dev < prev);
        prev = dev;
    }

    CHECK(binom_log_tail_at(10, 0.3, 0).log == 0.0);
    CHECK(binom_log_tail_at(10, 0.3, 11).is_zero);
    CHECK(binom_log_point_at(10, 0.3, -1).is_zero);
}

TEST_CASE("expected counts: exact small cases") {
    // E X_3 at (n=5, gamma=3/5, p=1/2): threshold 2, P(Bi(3,1/2)>=2) = 1/2, so 10*1/2 = 5.
    LogValue x = expected_log_xk(5, 3, RationalDensity(3, 5), 0.5);
    CHECK(x.log == doctest::Approx(std::log(5.0)).epsilon(1e-12));

    // Threshold 0 means probability one.
    LogValue x2 = expected_log_xk(30, 2, RationalDensity(0, 1), 0.5);
    CHECK(x2.log == doctest::Approx(log_binom(30, 2)).epsilon(1e-12));

    // E Z_3 surrogate at the same parameters: 10 * P(Bi(3,1/2)=2) = 10*3/8.
    LogValue z = expected_log_zk(5, 3, RationalDensity(3, 5), 0.5);
    CHECK(z.log == doctest::Approx(std::log(3.75)).epsilon(1e-12));

    // Point mass never exceeds the tail.
    for (int k = 3; k <= 8; ++k) {
        LogValue zz = expected_log_zk(20, k, RationalDensity(3, 5), 0.3);
        LogValue xx = expected_log_xk(20, k, RationalDensity(3, 5), 0.3);
        CHECK(zz.log <= xx.log + 1e-12);
    }

    // Monotone in n at fixed k.
    double prev = -1e300;
    for (std::int64_t n : {6, 8, 12, 20, 40}) {
        double cur = expected_log_zk(n, 4, RationalDensity(3, 5), 0.3).log;
        CHECK(cur > prev);
        prev = cur;
    }

    CHECK_THROWS(expected_log_xk(5, 1, RationalDensity(1, 2), 0.3));
    CHECK_THROWS(expected_log_xk(5, 6, RationalDensity(1, 2), 0.3));

    // The first-moment transition at n = 10^4, gamma = 1/2, p = 0.2: the
    // expected count is still large at the lower candidate but dips below
    // one a couple of sizes past kappa.
    {
        ModelParams mp{RationalDensity(1, 2), 0.2, 10000};
        std::int64_t above = static_cast<std::int64_t>(std::ceil(kappa_upper(mp, 0.1))) + 2;
        CHECK(expected_log_xk(10000, above, RationalDensity(1, 2), 0.2).log < 0.0);
        std::int64_t lower = predict_omega(mp).candidates.first;
        CHECK(expected_log_xk(10000, lower, RationalDensity(1, 2), 0.2).log > 0.0);
    }
}

TEST_CASE("expected count matches exhaustive enumeration on tiny instances") {
    // Enumerate all 2^C(n,2) labeled graphs, weight p^e (1-p)^(pairs-e), and
    // average the subset count directly.
    auto enumerate = [](int n, int k, const RationalDensity& gamma, double p) {
        int pairs = n * (n - 1) / 2;
        std::vector<std::pair<int, int>> idx;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) idx.emplace_back(i, j);
        std::int64_t thr = quasi_threshold(k, gamma);
        double expectation = 0.0;
        for (std::uint32_t code = 0; code < (1u << pairs); ++code) {
            int count = 0;
            // count k-subsets with enough induced edges
            for (std::uint32_t sub = 0; sub < (1u << n); ++sub) {
                if (std::popcount(sub) != k) continue;
                int e = 0;
                for (int t = 0; t < pairs; ++t) {
                    if (!((code >> t) & 1u)) continue;
                    if (((sub >> idx[static_cast<std::size_t>(t)].first) & 1u) &&
                        ((sub >> idx[static_cast<std::size_t>(t)].second) & 1u))
                        ++e;
                }
                if (e >= thr) ++count;
            }
            int edges = std::popcount(code);
            expectation += count * std::pow(p, edges) * std::pow(1.0 - p, pairs - edges);
        }
        return expectation;
    };

    double direct = enumerate(5, 3, RationalDensity(3, 5), 0.5);
    CHECK(std::exp(expected_log_xk(5, 3, RationalDensity(3, 5), 0.5).log) ==
          doctest::Approx(direct).epsilon(1e-9));
    double direct2 = enumerate(5, 4, RationalDensity(7, 10), 0.3);
    CHECK(std::exp(expected_log_xk(5, 4, RationalDensity(7, 10), 0.3).log) ==
          doctest::Approx(direct2).epsilon(1e-9));
}

TEST_CASE("kappa upper bound") {
    ModelParams params{RationalDensity(1, 2), 0.2, 50};
    CHECK(kappa_upper(params, 0.1) == doctest::Approx(13.243583780401732).epsilon(1e-12));

    // kappa(eps) - omega_th = 1/2 + eps exactly.
    for (auto gd : {std::pair<int, int>{1, 2}, {3, 5}, {9, 10}}) {
        ModelParams mp{RationalDensity(static_cast<std::uint64_t>(gd.first), static_cast<std::uint64_t>(gd.second)), 0.15, 200};
        Prediction pred = predict_omega(mp);
        CHECK(kappa_upper(mp, 0.0) - pred.omega_th == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(kappa_upper(mp, 0.3) > kappa_upper(mp, 0.2));
    }
    CHECK_THROWS(kappa_upper(ModelParams{RationalDensity(1, 2), 0.2, 2}, 0.1));
}

TEST_CASE("predictor reproduces the reference grid") {
    Prediction p1 = predict_omega(ModelParams{RationalDensity(1, 2), 0.20, 50});
    CHECK(p1.omega_th == doctest::Approx(12.643583780401732).epsilon(1e-12));
    CHECK(p1.candidates.first == 12);
    CHECK(p1.candidates.second == 13);
    CHECK(p1.kappa == doctest::Approx(p1.omega_th + 0.6).epsilon(1e-12));
    CHECK_FALSE(p1.omega_th_integral);

    Prediction p2 = predict_omega(ModelParams{RationalDensity(9, 10), 0.10, 50});
    CHECK(p2.omega_th == doctest::Approx(4.389989994772202).epsilon(1e-12));

    Prediction p3 = predict_omega(ModelParams{RationalDensity(3, 10), 0.05, 100});
    CHECK(p3.omega_th == doctest::Approx(14.4429697139712).epsilon(1e-12));

    for (const auto& row : kReferenceGrid) {
        ModelParams params{RationalDensity::parse(row.gamma), row.p, row.n};
        CHECK(std::fabs(predict_omega(params).omega_th - row.omega_th) <= 0.005);
    }
}
