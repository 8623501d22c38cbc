#pragma once

#include <cstdint>
#include <vector>

#include "qclique/bitset.hpp"
#include "qclique/graph.hpp"
#include "qclique/rational.hpp"
#include "qclique/rng.hpp"

namespace qclique {

// One overlap size whose induced edge count beats gamma*C(ell,2) + D_k(ell).
// In exhaustive mode `count` is the exact number of violating subsets; in
// search mode it is the number of witnesses found (at least one).
struct FlatnessViolation {
    std::int64_t ell = 0;
    std::uint64_t count = 0;
    VertexSet worst;
    std::int64_t worst_edges = 0;
};

struct FlatnessReport {
    bool is_flat = false;
    bool edge_count_ok = false;
    std::vector<FlatnessViolation> violations;
};

// Exact flatness check of the whole graph: edge count must equal
// ceil(gamma*C(k,2)) and every subset of size ell in [2, k-1] must satisfy
// e(A) <= gamma*C(ell,2) + D_k(ell). Graphs on up to kFlatnessExhaustiveLimit
// vertices are checked by full subset enumeration; larger graphs check each
// ell by an exact max-edges search, skipping sizes where the bound exceeds
// the trivial cap min(T, e(G)) and no subset can violate.
inline constexpr int kFlatnessExhaustiveLimit = 22;

FlatnessReport flatness_report(const Graph& g, const RationalDensity& gamma);

// Fraction of `samples` independent G(k, ceil(gamma*C(k,2))) draws that are
// gamma-flat. Sample i uses derive_seed(seed, 0, i), so the result does not
// depend on the parallel schedule.
double sample_flat_fraction(int k, const RationalDensity& gamma, int samples, Seed seed);

// Serial reference implementation (same result by construction).
double sample_flat_fraction_serial(int k, const RationalDensity& gamma, int samples, Seed seed);

}  // namespace qclique
