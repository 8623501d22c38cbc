#pragma once

#include <cstdint>
#include <limits>

#include "qclique/bitset.hpp"
#include "qclique/graph.hpp"
#include "qclique/rational.hpp"

namespace qclique {

// Node/time limits for one solve call. Defaults are unlimited.
struct SearchBudget {
    std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
    double max_seconds = std::numeric_limits<double>::infinity();

    static SearchBudget unlimited() { return SearchBudget{}; }
    static SearchBudget seconds(double s) { return SearchBudget{std::numeric_limits<std::uint64_t>::max(), s}; }
};

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t prunes = 0;
    double seconds = 0.0;

    void absorb(const SearchStats& o) {
        nodes += o.nodes;
        prunes += o.prunes;
        seconds += o.seconds;
    }
};

enum class SolveStatus { Solved, Timeout };

// Result of an exact quasi-clique-number computation. When status is Solved
// the witness attains omega and passes is_quasi_clique.
struct SolveOutcome {
    std::int64_t omega = 0;
    VertexSet witness;
    SearchStats stats;
    SolveStatus status = SolveStatus::Solved;
};

struct MaxEdgesResult {
    std::int64_t best = 0;
    VertexSet witness;
    SearchStats stats;
    SolveStatus status = SolveStatus::Solved;
};

enum class Feasibility { Yes, No, Indeterminate };

struct FeasibilityResult {
    Feasibility feasibility = Feasibility::No;
    VertexSet witness;  // filled on Yes
    SearchStats stats;
};

// Exhaustive 2^n oracle; n <= 26. Returns the exact quasi-clique number and
// the lexicographically least witness of maximum size.
SolveOutcome brute_force_omega(const Graph& g, const RationalDensity& gamma);

// Exact max of e(A) over |A| = k by branch and bound. Runs on whichever of
// the direct (choose k) or complement (delete n-k) side is smaller.
MaxEdgesResult max_edges_of_size_k(const Graph& g, int k, const SearchBudget& budget = {});

// Decision form: is there |A| = k with e(A) >= threshold? Early-exits on the
// first witness; an exhausted budget yields Indeterminate, never a boolean.
FeasibilityResult find_subset_with_edges(const Graph& g, int k, std::int64_t threshold,
                                         const SearchBudget& budget = {});

// Decision at the density threshold quasi_threshold(k, gamma).
FeasibilityResult feasible_k(const Graph& g, int k, const RationalDensity& gamma,
                             const SearchBudget& budget = {});

// Exact omega_gamma: greedy peeling for a lower bound, then an upward
// feasibility scan (size-feasibility is monotone by the hereditary
// min-degree-deletion argument, so the first No pins the answer).
SolveOutcome omega_gamma(const Graph& g, const RationalDensity& gamma,
                         const SearchBudget& budget = {});

namespace detail {

// Optimistic completion bound used by the direct-side search, exposed for the
// bound-soundness sweep in tests: never below the true max of e(C u Q) over
// r-subsets Q of the candidates.
std::int64_t direct_root_bound(const Graph& g, int k);

}  // namespace detail

}  // namespace qclique
