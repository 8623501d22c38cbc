#include <doctest.h>

#include <bit>
#include <cmath>
#include <vector>

#include "qclique/flatness.hpp"
#include "qclique/overlap.hpp"

using namespace qclique;

namespace {

Graph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

// All edges packed into the first k-1 vertices; the last vertex is isolated.
Graph packed_construction(int k, const RationalDensity& gamma) {
    std::int64_t m = static_cast<std::int64_t>(
        gamma.ceil_mul(static_cast<std::uint64_t>(k) * (k - 1) / 2));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k - 1 && static_cast<std::int64_t>(edges.size()) < m; ++i)
        for (int j = i + 1; j < k - 1 && static_cast<std::int64_t>(edges.size()) < m; ++j)
            edges.emplace_back(i, j);
    return Graph::from_edges(k, edges);
}

// Independent per-subset recount of the violations of a small graph.
std::vector<std::pair<int, std::uint64_t>> recount_violations(const Graph& g,
                                                              const RationalDensity& gamma) {
    int k = g.vertex_count();
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(k), 0);
    for (std::uint32_t sub = 1; sub < (1u << k); ++sub) {
        int size = std::popcount(sub);
        if (size < 2 || size > k - 1) continue;
        VertexSet s(k);
        for (int v = 0; v < k; ++v)
            if ((sub >> v) & 1u) s.add(v);
        std::int64_t e = g.induced_edge_count(s);
        std::int64_t t = static_cast<std::int64_t>(size) * (size - 1) / 2;
        double excess = static_cast<double>(e) * static_cast<double>(gamma.den()) -
                        static_cast<double>(gamma.num()) * static_cast<double>(t);
        if (excess > static_cast<double>(gamma.den()) * flatness_slack(k, size))
            ++counts[static_cast<std::size_t>(size)];
    }
    std::vector<std::pair<int, std::uint64_t>> out;
    for (int ell = 2; ell <= k - 1; ++ell)
        if (counts[static_cast<std::size_t>(ell)] > 0) out.emplace_back(ell, counts[static_cast<std::size_t>(ell)]);
    return out;
}

}  // namespace

TEST_CASE("flatness of named graphs") {
    FlatnessReport k5 = flatness_report(complete(5), RationalDensity(1, 1));
    CHECK(k5.is_flat);
    CHECK(k5.edge_count_ok);

    FlatnessReport c5 = flatness_report(cycle(5), RationalDensity(1, 2));
    CHECK(c5.is_flat);

    // Wrong edge count alone breaks flatness.
    FlatnessReport c6 = flatness_report(cycle(6), RationalDensity(1, 2));
    CHECK_FALSE(c6.edge_count_ok);  // 6 edges vs required ceil(7.5) = 8
    CHECK_FALSE(c6.is_flat);

    CHECK_THROWS(flatness_report(Graph::from_edges(2, {}), RationalDensity(1, 2)));
}

TEST_CASE("packed construction is reported non-flat at ell = k-1") {
    Graph g = packed_construction(100, RationalDensity(1, 2));
    CHECK(g.edge_count() == 2475);
    FlatnessReport rep = flatness_report(g, RationalDensity(1, 2));
    CHECK(rep.edge_count_ok);
    CHECK_FALSE(rep.is_flat);
    bool found = false;
    for (const auto& v : rep.violations) {
        if (v.ell == 99) {
            found = true;
            CHECK(v.worst_edges == 2475);
            CHECK(v.worst.count() == 99);
            // bound at ell = 99 is 2425.5 + 45.82
            CHECK(static_cast<double>(v.worst_edges) >
                  0.5 * 4851.0 + flatness_slack(100, 99));
        }
    }
    CHECK(found);
}

TEST_CASE("exhaustive mode matches an independent subset recount") {
    for (int t = 0; t < 6; ++t) {
        int k = 8 + t % 3;
        RationalDensity gamma = t % 2 ? RationalDensity(3, 5) : RationalDensity(1, 2);
        std::int64_t m = static_cast<std::int64_t>(
            gamma.ceil_mul(static_cast<std::uint64_t>(k) * (k - 1) / 2));
        Graph g = gen_gnm(k, m, derive_seed(Seed{31}, 6, t));
        FlatnessReport rep = flatness_report(g, gamma);
        auto expected = recount_violations(g, gamma);
        REQUIRE(rep.violations.size() == expected.size());
        for (std::size_t i = 0; i < expected.size(); ++i) {
            CHECK(rep.violations[i].ell == expected[i].first);
            CHECK(rep.violations[i].count == expected[i].second);
            CHECK(rep.violations[i].worst.count() == rep.violations[i].ell);
            CHECK(g.induced_edge_count(rep.violations[i].worst) == rep.violations[i].worst_edges);
        }
        CHECK(rep.is_flat == (rep.edge_count_ok && expected.empty()));
    }
}

TEST_CASE("flat fraction sampling") {
    // k = 3: the only checked size is ell = 2 with bound 0.5 + D >= 1 >= e(A).
    CHECK(sample_flat_fraction(3, RationalDensity(1, 2), 5, Seed{1}) == 1.0);

    // k = 30 at gamma = 1/2: no size can violate, so every sample is flat.
    CHECK(sample_flat_fraction(30, RationalDensity(1, 2), 20, Seed{2}) == 1.0);

    // Parallel and serial paths agree exactly, for any schedule.
    double par = sample_flat_fraction(40, RationalDensity(3, 5), 24, Seed{3});
    double ser = sample_flat_fraction_serial(40, RationalDensity(3, 5), 24, Seed{3});
    CHECK(par == ser);

    CHECK_THROWS(sample_flat_fraction(30, RationalDensity(1, 2), 0, Seed{1}));
    CHECK_THROWS(sample_flat_fraction(2, RationalDensity(1, 2), 5, Seed{1}));
}
