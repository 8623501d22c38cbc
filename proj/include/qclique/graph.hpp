#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qclique/bitset.hpp"
#include "qclique/rational.hpp"
#include "qclique/rng.hpp"

namespace qclique {

// Immutable simple undirected graph with bitset adjacency rows. Safe to share
// across concurrent tasks once constructed.
class Graph {
  public:
    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    std::int64_t edge_count() const { return m_; }
    int words_per_row() const { return words_; }

    bool has_edge(int i, int j) const {
        return (adj_[static_cast<std::size_t>(i) * words_ + (static_cast<std::size_t>(j) >> 6)] >>
                (j & 63)) & 1ULL;
    }

    const std::uint64_t* row(int v) const { return adj_.data() + static_cast<std::size_t>(v) * words_; }
    int degree(int v) const { return deg_[static_cast<std::size_t>(v)]; }

    // e(A): number of edges with both endpoints in `subset`.
    std::int64_t induced_edge_count(const VertexSet& subset) const;

    std::vector<std::pair<int, int>> edges() const;

    // Structural checks: symmetry, no loops, cached m and degrees consistent.
    void check_invariants() const;

  private:
    Graph(int n, std::vector<std::uint64_t> adj, std::vector<int> deg, std::int64_t m)
        : n_(n), words_((n + 63) / 64), m_(m), adj_(std::move(adj)), deg_(std::move(deg)) {}

    int n_;
    int words_;
    std::int64_t m_;
    std::vector<std::uint64_t> adj_;
    std::vector<int> deg_;
};

// Binomial random graph: each of the C(n,2) pairs is an edge independently
// with probability p. Pairs are visited in lexicographic (i<j) order with one
// SplitMix64 draw each, so the result is a pure function of (n, p, seed).
Graph gen_gnp(int n, double p, Seed seed);

// Uniform random graph with exactly m edges, via a partial Fisher-Yates
// shuffle of the C(n,2) pair indices. Pure function of (n, m, seed).
Graph gen_gnm(int n, std::int64_t m, Seed seed);

// ceil(gamma * C(k,2)), exact integer arithmetic.
std::int64_t quasi_threshold(std::int64_t k, const RationalDensity& gamma);

// True iff e(subset) >= quasi_threshold(|subset|, gamma). Sizes 0 and 1 are
// always quasi-cliques (threshold 0).
bool is_quasi_clique(const Graph& g, const VertexSet& subset, const RationalDensity& gamma);

// Edge-list text format: first line "n m", then m lines "u v" (0-based);
// '#' starts a comment line. Readers reject loops, out-of-range endpoints
// and wrong edge counts.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list_file(const Graph& g, const std::string& path);

}  // namespace qclique
