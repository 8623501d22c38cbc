#pragma once

#include <array>

namespace qclique {

// Benchmark grid for the predictor at n = 50 and n = 100: reference exact-solver
// statistics (100 instances per cell) and the predictor value each
// cell should reproduce to two decimals.
struct ReferenceRow {
    const char* gamma;
    int n;
    double p;
    int omega_min;
    int omega_max;
    double omega_avg;
    double omega_th;
};

inline constexpr std::array<ReferenceRow, 27> kReferenceGrid = {{
    // n = 50, p = 0.20
    {"9/10", 50, 0.20, 4, 5, 4.95, 5.72},
    {"4/5", 50, 0.20, 5, 7, 6.01, 6.92},
    {"7/10", 50, 0.20, 6, 8, 7.20, 8.44},
    {"3/5", 50, 0.20, 8, 11, 9.48, 10.41},
    {"1/2", 50, 0.20, 10, 15, 12.58, 12.64},
    // n = 50, p = 0.15
    {"9/10", 50, 0.15, 3, 5, 4.12, 5.06},
    {"4/5", 50, 0.15, 4, 6, 5.19, 6.03},
    {"7/10", 50, 0.15, 5, 8, 6.02, 7.26},
    {"3/5", 50, 0.15, 6, 10, 7.62, 8.87},
    {"1/2", 50, 0.15, 8, 12, 9.85, 10.99},
    // n = 50, p = 0.10
    {"9/10", 50, 0.10, 3, 5, 3.27, 4.39},
    {"4/5", 50, 0.10, 3, 5, 4.28, 5.14},
    {"7/10", 50, 0.10, 3, 6, 5.05, 6.09},
    {"3/5", 50, 0.10, 5, 8, 6.15, 7.34},
    {"1/2", 50, 0.10, 6, 10, 7.80, 9.05},
    // n = 100, p = 0.15
    {"9/10", 100, 0.15, 4, 5, 4.98, 5.82},
    {"17/20", 100, 0.15, 4, 6, 5.60, 6.40},
    {"4/5", 100, 0.15, 6, 7, 6.21, 7.04},
    {"3/4", 100, 0.15, 6, 8, 6.95, 7.78},
    // n = 100, p = 0.10
    {"9/10", 100, 0.10, 3, 6, 4.41, 4.99},
    {"4/5", 100, 0.10, 5, 7, 5.23, 5.92},
    {"7/10", 100, 0.10, 5, 8, 6.11, 7.12},
    {"3/5", 100, 0.10, 7, 10, 7.74, 8.75},
    // n = 100, p = 0.05
    {"4/5", 100, 0.05, 3, 5, 4.10, 4.73},
    {"3/5", 100, 0.05, 5, 7, 5.72, 6.65},
    {"2/5", 100, 0.05, 7, 11, 9.06, 10.56},
    {"3/10", 100, 0.05, 11, 16, 12.77, 14.44},
}};

}  // namespace qclique
