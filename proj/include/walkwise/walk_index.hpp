#pragma once

#include "walkwise/graph.hpp"
#include "walkwise/types.hpp"
#include "walkwise/vertex_set.hpp"
#include "walkwise/walk_counts.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace walkwise {

/// One tracked partition walk index: the number of walks of the given length
/// that originate from the boundary of (subset, subset^c) and end anywhere
/// (graph prediction) or at a target vertex (vertex prediction).
struct WalkIndexQuery {
    std::uint32_t length = 0;
    PredictionMode mode;
    VertexSet subset;

    static WalkIndexQuery graph_level(std::uint32_t length, VertexSet subset) {
        return {length, PredictionMode::graph(), std::move(subset)};
    }
    static WalkIndexQuery vertex_level(std::uint32_t length, VertexSet subset, Vertex target) {
        return {length, PredictionMode::vertex(target), std::move(subset)};
    }
};

/// Per-edge score: walk indices for every tracked query, in query order, plus
/// the ascending view used for lexicographic comparison.
struct ScoreTuple {
    std::vector<WalkCount> entries;
    std::vector<WalkCount> ascending;

    static ScoreTuple from_entries(std::vector<WalkCount> values);

    // Lexicographic comparison of the ascending views.
    friend bool operator<(const ScoreTuple& a, const ScoreTuple& b) {
        return a.ascending < b.ascending;
    }
    friend bool operator==(const ScoreTuple& a, const ScoreTuple& b) {
        return a.ascending == b.ascending;
    }
};

/// Walk index of the partition induced by the query's subset. An empty
/// boundary yields 0.
WalkCount walk_index(const Graph& g, const WalkIndexQuery& query);

/// For every candidate edge, the walk indices of all queries as they would be
/// after removing that edge. The graph is unchanged on return. Results are in
/// canonical edge order regardless of candidate order or thread count.
std::vector<std::pair<Edge, ScoreTuple>> edge_removal_scores(
    const Graph& g, std::span<const WalkIndexQuery> queries, std::span<const Edge> candidates,
    unsigned threads = 0);

/// The singleton-partition query family used by walk index sparsification:
/// for every vertex t, the vertex-prediction walk index of ({t}, {t}^c)
/// with target t.
std::vector<WalkIndexQuery> singleton_queries(std::size_t num_vertices, std::uint32_t length);

} // namespace walkwise
