#include "qclique/graph.hpp"

#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qclique {

namespace {

std::int64_t pair_count(std::int64_t n) { return n * (n - 1) / 2; }

std::pair<int, int> pair_from_index(std::int64_t n, std::int64_t idx) {
    // Walk the row lengths; n stays small enough that this is not hot.
    std::int64_t i = 0;
    std::int64_t row = n - 1;
    while (idx >= row) {
        idx -= row;
        ++i;
        --row;
    }
    return {static_cast<int>(i), static_cast<int>(i + 1 + idx)};
}

Graph build_from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<std::pair<int, int>> edges(pairs);
    return Graph::from_edges(n, edges);
}

}  // namespace

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    if (n < 1) throw std::invalid_argument("Graph: vertex count must be >= 1");
    int words = (n + 63) / 64;
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n) * words, 0);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::out_of_range("Graph: edge endpoint out of range");
        if (u == v) throw std::invalid_argument("Graph: self-loop");
        adj[static_cast<std::size_t>(u) * words + (static_cast<std::size_t>(v) >> 6)] |=
            1ULL << (v & 63);
        adj[static_cast<std::size_t>(v) * words + (static_cast<std::size_t>(u) >> 6)] |=
            1ULL << (u & 63);
    }
    std::vector<int> deg(n, 0);
    std::int64_t twice_m = 0;
    for (int v = 0; v < n; ++v) {
        int d = 0;
        for (int w = 0; w < words; ++w) d += std::popcount(adj[static_cast<std::size_t>(v) * words + w]);
        deg[static_cast<std::size_t>(v)] = d;
        twice_m += d;
    }
    return Graph(n, std::move(adj), std::move(deg), twice_m / 2);
}

std::int64_t Graph::induced_edge_count(const VertexSet& subset) const {
    if (subset.capacity() != n_)
        throw std::invalid_argument("induced_edge_count: subset width mismatch");
    const std::uint64_t* mask = subset.data();
    std::int64_t twice = 0;
    for (std::size_t wi = 0; wi < static_cast<std::size_t>(subset.word_count()); ++wi) {
        std::uint64_t w = mask[wi];
        while (w) {
            int v = static_cast<int>(wi * 64) + std::countr_zero(w);
            w &= w - 1;
            const std::uint64_t* r = row(v);
            for (int k = 0; k < words_; ++k) twice += std::popcount(r[k] & mask[k]);
        }
    }
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (has_edge(i, j)) out.emplace_back(i, j);
    return out;
}

void Graph::check_invariants() const {
    std::int64_t twice = 0;
    for (int i = 0; i < n_; ++i) {
        if (has_edge(i, i)) throw std::logic_error("Graph invariant: self-loop");
        int d = 0;
        for (int w = 0; w < words_; ++w)
            d += std::popcount(adj_[static_cast<std::size_t>(i) * words_ + w]);
        if (d != deg_[static_cast<std::size_t>(i)]) throw std::logic_error("Graph invariant: degree cache");
        twice += d;
        for (int j = i + 1; j < n_; ++j)
            if (has_edge(i, j) != has_edge(j, i)) throw std::logic_error("Graph invariant: symmetry");
    }
    if (twice != 2 * m_) throw std::logic_error("Graph invariant: edge count cache");
}

Graph gen_gnp(int n, double p, Seed seed) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("gen_gnp: p must be in (0,1)");
    if (n < 1) throw std::invalid_argument("gen_gnp: n must be >= 1");
    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (rng.next_double() < p) edges.emplace_back(i, j);
        }
    }
    return build_from_pairs(n, edges);
}

Graph gen_gnm(int n, std::int64_t m, Seed seed) {
    if (n < 1) throw std::invalid_argument("gen_gnm: n must be >= 1");
    std::int64_t total = pair_count(n);
    if (m < 0 || m > total) throw std::invalid_argument("gen_gnm: m out of range");
    SplitMix64 rng(seed);
    std::vector<std::int64_t> idx(static_cast<std::size_t>(total));
    for (std::int64_t i = 0; i < total; ++i) idx[static_cast<std::size_t>(i)] = i;
    // Partial Fisher-Yates: after i steps the first i entries are a uniform
    // i-subset in uniform order.
    for (std::int64_t i = 0; i < m; ++i) {
        std::int64_t j = i + static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(total - i)));
        std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (std::int64_t i = 0; i < m; ++i) edges.push_back(pair_from_index(n, idx[static_cast<std::size_t>(i)]));
    return build_from_pairs(n, edges);
}

std::int64_t quasi_threshold(std::int64_t k, const RationalDensity& gamma) {
    if (k < 0) throw std::invalid_argument("quasi_threshold: negative k");
    if (k < 2) return 0;
    return static_cast<std::int64_t>(gamma.ceil_mul(static_cast<std::uint64_t>(pair_count(k))));
}

bool is_quasi_clique(const Graph& g, const VertexSet& subset, const RationalDensity& gamma) {
    std::int64_t size = subset.count();
    return g.induced_edge_count(subset) >= quasi_threshold(size, gamma);
}

Graph read_edge_list(std::istream& in) {
    std::string line;
    auto next_data_line = [&](std::string& out) -> bool {
        while (std::getline(in, line)) {
            std::size_t pos = line.find_first_not_of(" \t\r");
            if (pos == std::string::npos) continue;
            if (line[pos] == '#') continue;
            out = line;
            return true;
        }
        return false;
    };
    std::string data;
    if (!next_data_line(data)) throw std::runtime_error("edge list: missing header line");
    std::istringstream head(data);
    std::int64_t n = 0, m = 0;
    if (!(head >> n >> m)) throw std::runtime_error("edge list: bad header line");
    if (n < 1) throw std::runtime_error("edge list: vertex count must be >= 1");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (std::int64_t i = 0; i < m; ++i) {
        if (!next_data_line(data)) throw std::runtime_error("edge list: fewer edges than declared");
        std::istringstream row(data);
        std::int64_t u = 0, v = 0;
        if (!(row >> u >> v)) throw std::runtime_error("edge list: bad edge line");
        if (u < 0 || u >= n || v < 0 || v >= n) throw std::runtime_error("edge list: endpoint out of range");
        if (u == v) throw std::runtime_error("edge list: self-loop");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (next_data_line(data)) throw std::runtime_error("edge list: more edges than declared");
    Graph g = Graph::from_edges(static_cast<int>(n), edges);
    if (g.edge_count() != m) throw std::runtime_error("edge list: duplicate edges (count mismatch)");
    return g;
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    try {
        return read_edge_list(in);
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

void write_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_edge_list(g, out);
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace qclique
