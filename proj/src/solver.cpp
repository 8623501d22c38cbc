#include "qclique/solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace qclique {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Candidate {
    int v;
    std::int32_t link;  // cross degree into the chosen (direct) / deleted (complement) set
};

// Shared state of a depth-first subset search over candidate suffixes.
// Candidate arrays and set masks are preallocated per depth.
class Engine {
  public:
    Engine(const Graph& g, int k, const SearchBudget& budget)
        : g_(g),
          n_(g.vertex_count()),
          words_(g.words_per_row()),
          k_(k),
          max_nodes_(budget.max_nodes),
          max_seconds_(budget.max_seconds),
          start_(Clock::now()) {
        cands_.resize(static_cast<std::size_t>(k_ + 1));
        masks_.resize(static_cast<std::size_t>(k_ + 1) * words_);
        scores_.resize(static_cast<std::size_t>(n_));
        order_.resize(static_cast<std::size_t>(n_));
        chosen_.assign(static_cast<std::size_t>(words_), 0);
        for (auto& c : cands_) c.reserve(static_cast<std::size_t>(n_));
    }

    SearchStats stats() const {
        SearchStats s;
        s.nodes = nodes_;
        s.prunes = prunes_;
        s.seconds = seconds_since(start_);
        return s;
    }

    bool timed_out() const { return timed_out_; }

  protected:
    bool budget_exceeded() {
        if (nodes_ > max_nodes_) return true;
        if ((nodes_ & 0x1FFF) == 0 && seconds_since(start_) > max_seconds_) return true;
        return false;
    }

    std::uint64_t* mask_at(int depth) { return masks_.data() + static_cast<std::size_t>(depth) * words_; }

    bool adj_bit(int u, int v) const {
        return (g_.row(u)[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1ULL;
    }

    int masked_degree(int u, const std::uint64_t* mask) const {
        const std::uint64_t* r = g_.row(u);
        int d = 0;
        for (int w = 0; w < words_; ++w) d += std::popcount(r[w] & mask[w]);
        return d;
    }

    const Graph& g_;
    int n_, words_, k_;
    std::uint64_t max_nodes_;
    double max_seconds_;
    Clock::time_point start_;

    std::vector<std::vector<Candidate>> cands_;
    std::vector<std::uint64_t> masks_;
    std::vector<std::int64_t> scores_;
    std::vector<int> order_;
    std::vector<std::uint64_t> chosen_;

    std::uint64_t nodes_ = 0;
    std::uint64_t prunes_ = 0;
    bool timed_out_ = false;
};

// Maximize e(A) over |A| = k, or decide e(A) >= threshold.
class DirectSearch : public Engine {
  public:
    DirectSearch(const Graph& g, int k, const SearchBudget& budget, std::int64_t threshold,
                 bool decision)
        : Engine(g, k, budget), threshold_(threshold), decision_(decision) {}

    void run() {
        auto& root = cands_[0];
        root.clear();
        for (int v : degree_order()) root.push_back({v, 0});
        std::uint64_t* mask = mask_at(0);
        for (int w = 0; w < words_; ++w) mask[w] = 0;
        for (int v = 0; v < n_; ++v) mask[static_cast<std::size_t>(v) >> 6] |= 1ULL << (v & 63);
        dfs(0, 0);
    }

    std::int64_t best_e() const { return best_e_; }
    const std::vector<std::uint64_t>& best_mask() const { return best_mask_; }
    bool found() const { return found_; }

    // Install an initial incumbent so a timed-out search still reports a
    // valid best-so-far.
    void seed_incumbent(const VertexSet& subset, std::int64_t e) {
        if (e > best_e_) {
            best_e_ = e;
            best_mask_.assign(subset.data(), subset.data() + words_);
        }
    }

  private:
    std::vector<int> degree_order() const {
        std::vector<int> order(static_cast<std::size_t>(n_));
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (g_.degree(a) != g_.degree(b)) return g_.degree(a) > g_.degree(b);
            return a < b;
        });
        return order;
    }

    void record(const std::uint64_t* chosen_mask, int extra, std::int64_t e) {
        if (e <= best_e_) return;
        best_e_ = e;
        best_mask_.assign(chosen_mask, chosen_mask + words_);
        if (extra >= 0)
            best_mask_[static_cast<std::size_t>(extra) >> 6] |= 1ULL << (extra & 63);
        if (decision_ && best_e_ >= threshold_) found_ = true;
    }

    // Complete the current prefix with the first r candidates (any completion
    // works once the threshold is already met).
    void record_padded(int depth, std::int64_t e_chosen, int r) {
        const auto& cs = cands_[static_cast<std::size_t>(depth)];
        std::int64_t e = e_chosen;
        std::vector<std::uint64_t> mask(chosen_.begin(), chosen_.end());
        for (int j = 0; j < r; ++j) {
            int v = cs[static_cast<std::size_t>(j)].v;
            e += cs[static_cast<std::size_t>(j)].link;
            for (int jj = 0; jj < j; ++jj)
                if (adj_bit(v, cs[static_cast<std::size_t>(jj)].v)) ++e;
            mask[static_cast<std::size_t>(v) >> 6] |= 1ULL << (v & 63);
        }
        best_e_ = e;
        best_mask_ = mask;
        found_ = true;
    }

    void dfs(int depth, std::int64_t e_chosen) {
        ++nodes_;
        if (budget_exceeded()) {
            timed_out_ = true;
            return;
        }
        auto& cs = cands_[static_cast<std::size_t>(depth)];
        int avail = static_cast<int>(cs.size());
        int r = k_ - depth;
        if (r == 0) {
            record(chosen_.data(), -1, e_chosen);
            return;
        }
        if (avail < r) {
            ++prunes_;
            return;
        }
        if (decision_ && e_chosen >= threshold_) {
            record_padded(depth, e_chosen, r);
            return;
        }
        const std::int64_t need2 = 2 * (decision_ ? threshold_ : best_e_ + 1);

        // Stage 1: cross degrees only, internal part capped by C(r,2).
        {
            std::int64_t sum = 0;
            if (avail <= r) {
                for (const auto& c : cs) sum += c.link;
            } else {
                auto* sc = scores_.data();
                for (int i = 0; i < avail; ++i) sc[i] = cs[static_cast<std::size_t>(i)].link;
                std::nth_element(sc, sc + (r - 1), sc + avail, std::greater<>());
                for (int i = 0; i < r; ++i) sum += sc[i];
            }
            if (2 * e_chosen + 2 * sum + static_cast<std::int64_t>(r) * (r - 1) < need2) {
                ++prunes_;
                return;
            }
        }

        // Stage 2: exact candidate-internal degrees; score2 = 2*cross + min(id, r-1).
        const std::uint64_t* cand_mask = mask_at(depth);
        for (int i = 0; i < avail; ++i) {
            const auto& c = cs[static_cast<std::size_t>(i)];
            int id = masked_degree(c.v, cand_mask);
            scores_[static_cast<std::size_t>(i)] =
                2 * static_cast<std::int64_t>(c.link) + std::min<std::int64_t>(id, r - 1);
        }
        auto* ord = order_.data();
        std::iota(ord, ord + avail, 0);
        std::sort(ord, ord + avail, [&](int a, int b) {
            if (scores_[static_cast<std::size_t>(a)] != scores_[static_cast<std::size_t>(b)])
                return scores_[static_cast<std::size_t>(a)] > scores_[static_cast<std::size_t>(b)];
            return cs[static_cast<std::size_t>(a)].v < cs[static_cast<std::size_t>(b)].v;
        });
        {
            std::int64_t top = 0;
            for (int i = 0; i < r; ++i) top += scores_[static_cast<std::size_t>(ord[i])];
            if (2 * e_chosen + top < need2) {
                ++prunes_;
                return;
            }
        }

        // Reorder candidates by score so promising branches come first; the
        // suffix passed to each child keeps this node's order.
        auto& scratch = cands_[static_cast<std::size_t>(depth + 1)];
        scratch.clear();
        for (int i = 0; i < avail; ++i) scratch.push_back(cs[static_cast<std::size_t>(ord[i])]);
        cs.swap(scratch);

        std::uint64_t* child_mask = mask_at(depth + 1);
        std::copy(cand_mask, cand_mask + words_, child_mask);
        for (int j = 0; j + r <= avail; ++j) {
            const Candidate me = cs[static_cast<std::size_t>(j)];
            child_mask[static_cast<std::size_t>(me.v) >> 6] &= ~(1ULL << (me.v & 63));
            std::int64_t e_child = e_chosen + me.link;
            if (r == 1) {
                record(chosen_.data(), me.v, e_child);
                if (found_) return;
                continue;
            }
            auto& child = cands_[static_cast<std::size_t>(depth + 1)];
            child.clear();
            const std::uint64_t* row = g_.row(me.v);
            for (int i = j + 1; i < avail; ++i) {
                Candidate c = cs[static_cast<std::size_t>(i)];
                c.link += static_cast<std::int32_t>((row[static_cast<std::size_t>(c.v) >> 6] >> (c.v & 63)) & 1ULL);
                child.push_back(c);
            }
            chosen_[static_cast<std::size_t>(me.v) >> 6] |= 1ULL << (me.v & 63);
            dfs(depth + 1, e_child);
            chosen_[static_cast<std::size_t>(me.v) >> 6] &= ~(1ULL << (me.v & 63));
            if (found_ || timed_out_) return;
        }
    }

    std::int64_t threshold_;
    bool decision_;
    std::int64_t best_e_ = -1;
    std::vector<std::uint64_t> best_mask_;
    bool found_ = false;
};

// Minimize the number of edges incident to a deleted set D of fixed size, or
// decide inc(D) <= allowed. Dual form of the direct search: e(V \ D) = m - inc(D).
class ComplementSearch : public Engine {
  public:
    ComplementSearch(const Graph& g, int d, const SearchBudget& budget, std::int64_t allowed,
                     bool decision)
        : Engine(g, d, budget), allowed_(allowed), decision_(decision) {}

    void run() {
        auto& root = cands_[0];
        root.clear();
        std::vector<int> order(static_cast<std::size_t>(n_));
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (g_.degree(a) != g_.degree(b)) return g_.degree(a) < g_.degree(b);
            return a < b;
        });
        for (int v : order) root.push_back({v, 0});
        std::uint64_t* mask = mask_at(0);
        for (int w = 0; w < words_; ++w) mask[w] = 0;
        for (int v = 0; v < n_; ++v) mask[static_cast<std::size_t>(v) >> 6] |= 1ULL << (v & 63);
        dfs(0, 0);
    }

    std::int64_t best_inc() const { return best_inc_; }
    const std::vector<std::uint64_t>& best_mask() const { return best_mask_; }
    bool found() const { return found_; }

    void seed_incumbent(const VertexSet& deleted, std::int64_t inc) {
        if (best_inc_ < 0 || inc < best_inc_) {
            best_inc_ = inc;
            best_mask_.assign(deleted.data(), deleted.data() + words_);
        }
    }

  private:
    void record(const std::uint64_t* del_mask, int extra, std::int64_t inc) {
        if (best_inc_ >= 0 && inc >= best_inc_) return;
        best_inc_ = inc;
        best_mask_.assign(del_mask, del_mask + words_);
        if (extra >= 0)
            best_mask_[static_cast<std::size_t>(extra) >> 6] |= 1ULL << (extra & 63);
        if (decision_ && best_inc_ <= allowed_) found_ = true;
    }

    void dfs(int depth, std::int64_t inc) {
        ++nodes_;
        if (budget_exceeded()) {
            timed_out_ = true;
            return;
        }
        auto& cs = cands_[static_cast<std::size_t>(depth)];
        int avail = static_cast<int>(cs.size());
        int r = k_ - depth;
        if (r == 0) {
            record(chosen_.data(), -1, inc);
            return;
        }
        if (avail < r) {
            ++prunes_;
            return;
        }
        const std::int64_t cap2 = 2 * (decision_ ? allowed_ : (best_inc_ < 0 ? (2 * g_.edge_count() + 1)
                                                                             : best_inc_ - 1));

        // score2(u) = 2*(deg(u) - cross-to-deleted) - min(id, r-1); summing the
        // r smallest lower-bounds twice the final incidence.
        const std::uint64_t* cand_mask = mask_at(depth);
        for (int i = 0; i < avail; ++i) {
            const auto& c = cs[static_cast<std::size_t>(i)];
            int id = masked_degree(c.v, cand_mask);
            scores_[static_cast<std::size_t>(i)] =
                2 * static_cast<std::int64_t>(g_.degree(c.v) - c.link) -
                std::min<std::int64_t>(id, r - 1);
        }
        auto* ord = order_.data();
        std::iota(ord, ord + avail, 0);
        std::sort(ord, ord + avail, [&](int a, int b) {
            if (scores_[static_cast<std::size_t>(a)] != scores_[static_cast<std::size_t>(b)])
                return scores_[static_cast<std::size_t>(a)] < scores_[static_cast<std::size_t>(b)];
            return cs[static_cast<std::size_t>(a)].v < cs[static_cast<std::size_t>(b)].v;
        });
        {
            std::int64_t low = 0;
            for (int i = 0; i < r; ++i) low += scores_[static_cast<std::size_t>(ord[i])];
            if (2 * inc + low > cap2) {
                ++prunes_;
                return;
            }
        }

        auto& scratch = cands_[static_cast<std::size_t>(depth + 1)];
        scratch.clear();
        for (int i = 0; i < avail; ++i) scratch.push_back(cs[static_cast<std::size_t>(ord[i])]);
        cs.swap(scratch);

        std::uint64_t* child_mask = mask_at(depth + 1);
        std::copy(cand_mask, cand_mask + words_, child_mask);
        for (int j = 0; j + r <= avail; ++j) {
            const Candidate me = cs[static_cast<std::size_t>(j)];
            child_mask[static_cast<std::size_t>(me.v) >> 6] &= ~(1ULL << (me.v & 63));
            std::int64_t inc_child = inc + g_.degree(me.v) - me.link;
            if (r == 1) {
                record(chosen_.data(), me.v, inc_child);
                if (found_) return;
                continue;
            }
            auto& child = cands_[static_cast<std::size_t>(depth + 1)];
            child.clear();
            const std::uint64_t* row = g_.row(me.v);
            for (int i = j + 1; i < avail; ++i) {
                Candidate c = cs[static_cast<std::size_t>(i)];
                c.link += static_cast<std::int32_t>((row[static_cast<std::size_t>(c.v) >> 6] >> (c.v & 63)) & 1ULL);
                child.push_back(c);
            }
            chosen_[static_cast<std::size_t>(me.v) >> 6] |= 1ULL << (me.v & 63);
            dfs(depth + 1, inc_child);
            chosen_[static_cast<std::size_t>(me.v) >> 6] &= ~(1ULL << (me.v & 63));
            if (found_ || timed_out_) return;
        }
    }

    std::int64_t allowed_;
    bool decision_;
    std::int64_t best_inc_ = -1;
    std::vector<std::uint64_t> best_mask_;
    bool found_ = false;
};

VertexSet mask_to_set(int n, const std::vector<std::uint64_t>& mask) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
        if ((mask[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1ULL) s.add(v);
    return s;
}

VertexSet complement_set(int n, const VertexSet& s) {
    VertexSet out(n);
    for (int v = 0; v < n; ++v)
        if (!s.contains(v)) out.add(v);
    return out;
}

VertexSet first_k_vertices(int n, int k) {
    VertexSet s(n);
    for (int v = 0; v < k; ++v) s.add(v);
    return s;
}

// k vertices of extreme degree (ties: lower index); greedy incumbents for
// the max searches.
VertexSet degree_extreme_set(const Graph& g, int k, bool highest) {
    int n = g.vertex_count();
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b))
            return highest ? g.degree(a) > g.degree(b) : g.degree(a) < g.degree(b);
        return a < b;
    });
    VertexSet s(n);
    for (int i = 0; i < k; ++i) s.add(order[static_cast<std::size_t>(i)]);
    return s;
}

std::int64_t incident_edge_count(const Graph& g, const VertexSet& deleted) {
    std::int64_t sum = 0;
    for (int v : deleted.to_vector()) sum += g.degree(v);
    return sum - g.induced_edge_count(deleted);
}

// Greedy peel: repeatedly delete a minimum-degree vertex (ties: lowest
// index). Returns the removal order and e(remaining) before each removal,
// indexed so prefix_edges[s] = e of the last-s-standing set.
struct PeelResult {
    std::vector<int> removal_order;
    std::vector<std::int64_t> prefix_edges;  // size n+1; [s] = edges among remaining s
};

PeelResult greedy_peel(const Graph& g) {
    int n = g.vertex_count();
    PeelResult out;
    out.prefix_edges.assign(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<bool> alive(static_cast<std::size_t>(n), true);
    for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
    std::int64_t e = g.edge_count();
    for (int remaining = n; remaining >= 1; --remaining) {
        out.prefix_edges[static_cast<std::size_t>(remaining)] = e;
        int victim = -1;
        for (int v = 0; v < n; ++v) {
            if (!alive[static_cast<std::size_t>(v)]) continue;
            if (victim < 0 || deg[static_cast<std::size_t>(v)] < deg[static_cast<std::size_t>(victim)])
                victim = v;
        }
        alive[static_cast<std::size_t>(victim)] = false;
        out.removal_order.push_back(victim);
        e -= deg[static_cast<std::size_t>(victim)];
        for (int u = 0; u < n; ++u)
            if (alive[static_cast<std::size_t>(u)] && g.has_edge(victim, u)) --deg[static_cast<std::size_t>(u)];
    }
    return out;
}

VertexSet peel_suffix_set(const Graph& g, const PeelResult& peel, int s) {
    int n = g.vertex_count();
    VertexSet set(n);
    for (int i = n - s; i < n; ++i) set.add(peel.removal_order[static_cast<std::size_t>(i)]);
    return set;
}

}  // namespace

SolveOutcome brute_force_omega(const Graph& g, const RationalDensity& gamma) {
    int n = g.vertex_count();
    if (n > 26) throw std::invalid_argument("brute_force_omega: n must be <= 26");
    auto start = Clock::now();

    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        std::uint32_t row = 0;
        for (int u = 0; u < n; ++u)
            if (u != v && g.has_edge(v, u)) row |= 1u << u;
        adj[static_cast<std::size_t>(v)] = row;
    }
    std::vector<std::int64_t> thr(static_cast<std::size_t>(n) + 1);
    for (int s = 0; s <= n; ++s) thr[static_cast<std::size_t>(s)] = quasi_threshold(s, gamma);

    auto lex_less = [](std::uint32_t a, std::uint32_t b) {
        std::uint32_t diff = a ^ b;
        if (diff == 0) return false;
        return (a & (diff & (~diff + 1))) != 0;
    };

    // Gray-code walk: consecutive subsets differ in one vertex, so the edge
    // count updates with a single masked popcount.
    std::uint32_t mask = 0;
    std::int64_t e = 0;
    int size = 0;
    int best_size = 1;  // empty and singleton sets are always quasi-cliques
    std::uint32_t best_mask = 1;
    std::uint64_t total = 1ULL << n;
    for (std::uint64_t i = 1; i < total; ++i) {
        int b = std::countr_zero(i);
        std::uint32_t bit = 1u << b;
        if (mask & bit) {
            mask ^= bit;
            e -= std::popcount(adj[static_cast<std::size_t>(b)] & mask);
            --size;
        } else {
            mask ^= bit;
            e += std::popcount(adj[static_cast<std::size_t>(b)] & mask);
            ++size;
        }
        if (e >= thr[static_cast<std::size_t>(size)]) {
            if (size > best_size || (size == best_size && lex_less(mask, best_mask))) {
                best_size = size;
                best_mask = mask;
            }
        }
    }

    SolveOutcome out;
    out.omega = best_size;
    out.witness = VertexSet(n);
    for (int v = 0; v < n; ++v)
        if ((best_mask >> v) & 1u) out.witness.add(v);
    out.stats.nodes = total;
    out.stats.seconds = seconds_since(start);
    out.status = SolveStatus::Solved;
    return out;
}

MaxEdgesResult max_edges_of_size_k(const Graph& g, int k, const SearchBudget& budget) {
    int n = g.vertex_count();
    if (k < 1 || k > n) throw std::invalid_argument("max_edges_of_size_k: k out of range");
    MaxEdgesResult out;
    if (k == n) {
        out.best = g.edge_count();
        out.witness = first_k_vertices(n, n);
        return out;
    }
    if (k == 1) {
        out.best = 0;
        out.witness = first_k_vertices(n, 1);
        return out;
    }
    if (k <= n - k) {
        DirectSearch search(g, k, budget, /*threshold=*/0, /*decision=*/false);
        VertexSet greedy = degree_extreme_set(g, k, /*highest=*/true);
        search.seed_incumbent(greedy, g.induced_edge_count(greedy));
        search.run();
        out.stats = search.stats();
        out.status = search.timed_out() ? SolveStatus::Timeout : SolveStatus::Solved;
        out.best = search.best_e();
        out.witness = mask_to_set(n, search.best_mask());
        return out;
    }
    ComplementSearch search(g, n - k, budget, /*allowed=*/0, /*decision=*/false);
    VertexSet greedy = degree_extreme_set(g, n - k, /*highest=*/false);
    search.seed_incumbent(greedy, incident_edge_count(g, greedy));
    search.run();
    out.stats = search.stats();
    out.status = search.timed_out() ? SolveStatus::Timeout : SolveStatus::Solved;
    out.best = g.edge_count() - search.best_inc();
    out.witness = complement_set(n, mask_to_set(n, search.best_mask()));
    return out;
}

FeasibilityResult find_subset_with_edges(const Graph& g, int k, std::int64_t threshold,
                                         const SearchBudget& budget) {
    int n = g.vertex_count();
    if (k < 1 || k > n) throw std::invalid_argument("find_subset_with_edges: k out of range");
    FeasibilityResult out;
    if (threshold <= 0) {
        out.feasibility = Feasibility::Yes;
        out.witness = first_k_vertices(n, k);
        return out;
    }
    std::int64_t cap = std::min<std::int64_t>(static_cast<std::int64_t>(k) * (k - 1) / 2, g.edge_count());
    if (threshold > cap) {
        out.feasibility = Feasibility::No;
        return out;
    }

    // Cheap upper-bound screens. Direct side: half the sum of the k largest
    // degrees. Complement side: deleting the n-k lowest-degree vertices loses
    // at least their degree sum minus the pairs among them.
    {
        std::vector<int> degs(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) degs[static_cast<std::size_t>(v)] = g.degree(v);
        std::sort(degs.begin(), degs.end(), std::greater<>());
        std::int64_t sum = 0;
        for (int i = 0; i < k; ++i) sum += std::min(degs[static_cast<std::size_t>(i)], k - 1);
        if (sum / 2 < threshold) {
            out.feasibility = Feasibility::No;
            return out;
        }
        std::int64_t d = n - k;
        std::int64_t low_sum = 0;
        for (int i = 0; i < d; ++i) low_sum += degs[static_cast<std::size_t>(n - 1 - i)];
        std::int64_t min_incident = std::max<std::int64_t>(0, low_sum - d * (d - 1) / 2);
        if (g.edge_count() - min_incident < threshold) {
            out.feasibility = Feasibility::No;
            return out;
        }
    }

    // Greedy probes before any search: peel suffix, then top-degree set.
    {
        PeelResult peel = greedy_peel(g);
        VertexSet suffix = peel_suffix_set(g, peel, k);
        if (peel.prefix_edges[static_cast<std::size_t>(k)] >= threshold) {
            out.feasibility = Feasibility::Yes;
            out.witness = suffix;
            return out;
        }
        std::vector<int> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
            return a < b;
        });
        VertexSet top(n);
        for (int i = 0; i < k; ++i) top.add(order[static_cast<std::size_t>(i)]);
        if (g.induced_edge_count(top) >= threshold) {
            out.feasibility = Feasibility::Yes;
            out.witness = top;
            return out;
        }
    }

    if (k <= n - k) {
        DirectSearch search(g, k, budget, threshold, /*decision=*/true);
        search.run();
        out.stats = search.stats();
        if (search.found()) {
            out.feasibility = Feasibility::Yes;
            out.witness = mask_to_set(n, search.best_mask());
        } else {
            out.feasibility = search.timed_out() ? Feasibility::Indeterminate : Feasibility::No;
        }
        return out;
    }
    ComplementSearch search(g, n - k, budget, g.edge_count() - threshold, /*decision=*/true);
    search.run();
    out.stats = search.stats();
    if (search.found()) {
        out.feasibility = Feasibility::Yes;
        out.witness = complement_set(n, mask_to_set(n, search.best_mask()));
    } else {
        out.feasibility = search.timed_out() ? Feasibility::Indeterminate : Feasibility::No;
    }
    return out;
}

FeasibilityResult feasible_k(const Graph& g, int k, const RationalDensity& gamma,
                             const SearchBudget& budget) {
    return find_subset_with_edges(g, k, quasi_threshold(k, gamma), budget);
}

SolveOutcome omega_gamma(const Graph& g, const RationalDensity& gamma, const SearchBudget& budget) {
    int n = g.vertex_count();
    auto start = Clock::now();
    SolveOutcome out;

    PeelResult peel = greedy_peel(g);
    int lower = 1;
    for (int s = n; s >= 1; --s) {
        if (peel.prefix_edges[static_cast<std::size_t>(s)] >= quasi_threshold(s, gamma)) {
            lower = s;
            break;
        }
    }
    out.omega = lower;
    out.witness = peel_suffix_set(g, peel, lower);
    out.status = SolveStatus::Solved;

    for (int k = lower + 1; k <= n; ++k) {
        SearchBudget remaining = budget;
        if (std::isfinite(budget.max_seconds)) {
            remaining.max_seconds = budget.max_seconds - seconds_since(start);
            if (remaining.max_seconds <= 0.0) {
                out.status = SolveStatus::Timeout;
                break;
            }
        }
        if (budget.max_nodes != std::numeric_limits<std::uint64_t>::max()) {
            remaining.max_nodes = budget.max_nodes > out.stats.nodes
                                      ? budget.max_nodes - out.stats.nodes
                                      : 0;
        }
        FeasibilityResult f = feasible_k(g, k, gamma, remaining);
        out.stats.nodes += f.stats.nodes;
        out.stats.prunes += f.stats.prunes;
        if (f.feasibility == Feasibility::Yes) {
            out.omega = k;
            out.witness = f.witness;
            continue;
        }
        if (f.feasibility == Feasibility::Indeterminate) out.status = SolveStatus::Timeout;
        break;
    }
    out.stats.seconds = seconds_since(start);
    return out;
}

namespace detail {

std::int64_t direct_root_bound(const Graph& g, int k) {
    int n = g.vertex_count();
    std::vector<std::int64_t> score;
    score.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        score.push_back(std::min<std::int64_t>(g.degree(v), k - 1));
    std::sort(score.begin(), score.end(), std::greater<>());
    std::int64_t sum = 0;
    for (int i = 0; i < k; ++i) sum += score[static_cast<std::size_t>(i)];
    return sum / 2;
}

}  // namespace detail

}  // namespace qclique
