#include "walkwise/graph.hpp"
#include "walkwise/rng.hpp"
#include "walkwise/walk_counts.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

using namespace walkwise;

namespace {

Graph path3() {
    const Edge edges[] = {{0, 1}, {1, 2}};
    return Graph::build(edges, 3, false);
}

Graph triangle() {
    const Edge edges[] = {{0, 1}, {1, 2}, {0, 2}};
    return Graph::build(edges, 3, false);
}

} // namespace

TEST_CASE("length zero counts shared vertices") {
    const Graph g = path3();
    CHECK(count_walks(g, 0, VertexSet{0, 1}, VertexSet{1, 2}) == 1);
    CHECK(count_walks(g, 0, VertexSet::full(3), VertexSet::full(3)) == 3);
}

TEST_CASE("frozen small-graph counts") {
    // K3 with self-loops has the all-ones adjacency matrix.
    CHECK(count_walks(triangle(), 1, VertexSet::full(3), VertexSet::full(3)) == 9);
    // P3: entry sum of A^2 for A = [[1,1,0],[1,1,1],[0,1,1]].
    CHECK(count_walks(path3(), 2, VertexSet::full(3), VertexSet::full(3)) == 17);
    CHECK(oracle::dfs_count_walks(path3(), 2, VertexSet::full(3), VertexSet::full(3)) == 17);
}

TEST_CASE("power representations agree with each other and the walk oracle") {
    DeterministicRng rng(99021);
    for (int trial = 0; trial < 40; ++trial) {
        const bool directed = trial % 3 == 0;
        const std::size_t n = 2 + rng.below(5);
        const Graph g = oracle::random_graph(rng, n, 1, 2, directed);
        const VertexSet from = oracle::random_subset(rng, n);
        const VertexSet to = oracle::random_subset(rng, n);
        for (std::uint32_t length = 0; length <= 4; ++length) {
            const WalkCount expected = oracle::dfs_count_walks(g, length, from, to);
            CHECK(count_walks(g, length, from, to) == expected);
            CHECK(count_walks(g, length, from, to, PowerRepr::Dense) == expected);
            CHECK(count_walks(g, length, from, to, PowerRepr::Sparse) == expected);
        }
    }
}

TEST_CASE("long walks stay exact") {
    // Walk counts on K3 grow as 3^l; length 40 overflows 64-bit arithmetic.
    const WalkCount total = count_walks(triangle(), 40, VertexSet::full(3), VertexSet::full(3));
    WalkCount expected = 1;
    for (int k = 0; k < 41; ++k) expected *= 3;
    CHECK(total == expected);
}

TEST_CASE("walk count invariants") {
    DeterministicRng rng(555001);
    int monotone_checked = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + rng.below(6);
        const Graph g = oracle::random_graph(rng, n, 1, 2);
        const VertexSet subset = oracle::random_subset(rng, n);
        const VertexSet boundary = g.boundary(subset);
        if (boundary.empty()) continue;
        ++monotone_checked;
        const VertexSet all = VertexSet::full(n);
        for (std::uint32_t length = 0; length <= 3; ++length) {
            const WalkCount shorter = count_walks(g, length, boundary, all);
            CHECK(shorter <= count_walks(g, length + 1, boundary, all));
            CHECK(2 * shorter <= count_walks(g, length + 2, boundary, all));
        }
        const std::vector<Edge> edges = g.edges();
        if (!edges.empty()) {
            const Edge e = edges[rng.below(edges.size())];
            const Graph h = g.without_edge(e);
            const VertexSet to = oracle::random_subset(rng, n);
            const std::uint32_t length = static_cast<std::uint32_t>(rng.below(4));
            CHECK(count_walks(h, length, boundary, to) <= count_walks(g, length, boundary, to));
        }
    }
    CHECK(monotone_checked > 10);
}
