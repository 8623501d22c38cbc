#pragma once

#include <string>
#include <vector>

#include "qclique/rng.hpp"

namespace qclique {

enum class VerifyLevel { Quick, Full };

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifySummary {
    std::vector<CheckResult> checks;

    int failures() const {
        int f = 0;
        for (const auto& c : checks)
            if (!c.pass) ++f;
        return f;
    }
};

// Runs the numeric cross-checks end to end: binomial exponent behaviour,
// Stirling residual, predictor vs the reference grid, hypergeometric
// normalizations, overlap-ratio monotonicity, variance-integrand
// inequalities, flatness sampling, the variance trend (full level only) and
// solver-vs-oracle equivalence. Failures are data in the summary, not
// exceptions.
VerifySummary verify_suite(VerifyLevel level, Seed seed);

}  // namespace qclique
