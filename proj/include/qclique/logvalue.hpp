#pragma once

#include <cmath>
#include <limits>

namespace qclique {

// Natural-log carrier for probabilities and expectations that underflow any
// fixed-width float long before the parameter ranges of interest. An exact
// zero (empty support) is a separate flag, not -inf arithmetic.
struct LogValue {
    double log = 0.0;
    bool is_zero = false;

    static LogValue from_log(double lg) { return LogValue{lg, false}; }
    static LogValue zero() { return LogValue{0.0, true}; }

    double value() const { return is_zero ? 0.0 : std::exp(log); }
};

// Streaming max-shifted log-sum-exp: result() = log(sum of exp(x_i)).
class LogSumAccumulator {
  public:
    void add(double x) {
        if (empty_) {
            max_ = x;
            sum_ = 1.0;
            empty_ = false;
            return;
        }
        if (x > max_) {
            sum_ = sum_ * std::exp(max_ - x) + 1.0;
            max_ = x;
        } else {
            sum_ += std::exp(x - max_);
        }
    }

    void add(const LogValue& v) {
        if (!v.is_zero) add(v.log);
    }

    bool empty() const { return empty_; }

    LogValue result() const {
        if (empty_) return LogValue::zero();
        return LogValue::from_log(max_ + std::log(sum_));
    }

  private:
    double max_ = -std::numeric_limits<double>::infinity();
    double sum_ = 0.0;
    bool empty_ = true;
};

}  // namespace qclique
