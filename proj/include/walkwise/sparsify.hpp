#pragma once

#include "walkwise/graph.hpp"
#include "walkwise/types.hpp"
#include "walkwise/walk_index.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace walkwise {

/// Deterministic resolution of argmax ties between edges with equal scores.
enum class TieBreak { SmallestEdge, LargestEdge };

/// Order over score tuples used by the general sparsifier. Sum/Min/Max
/// compare the aggregate first and fall back to the sorted-lexicographic
/// order on equality.
enum class ArgmaxOrder { SortedLexicographic, Sum, Min, Max };

struct DegreePair {
    std::size_t deg_min = 0;
    std::size_t deg_max = 0;
    friend bool operator==(const DegreePair&, const DegreePair&) = default;
};

// Score of an edge at the moment it was selected: the ascending walk-index
// tuple, the degree pair (degree-based fast path), or nothing (random).
using SelectionScore = std::variant<std::monostate, std::vector<WalkCount>, DegreePair>;

struct RemovalRecord {
    std::size_t iteration = 0; // 1-based scoring pass; batched removals share it
    Edge edge;
    SelectionScore score;
};

/// Reproducible record of one sparsification run. Replaying `removed` on the
/// input graph yields `final_graph`.
struct RemovalTrace {
    std::string algorithm;
    std::uint32_t depth = 0;
    std::size_t batch_size = 1;
    TieBreak tie_break = TieBreak::SmallestEdge;
    std::uint64_t seed = 0;
    std::size_t requested = 0;
    bool exhausted = false; // requested exceeded the removable edges
    std::vector<RemovalRecord> removed;
    Graph final_graph;
};

struct SparsifyOptions {
    std::size_t batch_size = 1;
    TieBreak tie_break = TieBreak::SmallestEdge;
    unsigned threads = 0;
};

/// Inputs for general walk index sparsification: the partitions whose walk
/// indices are to be maintained and the order used for the per-edge argmax.
struct GwisConfig {
    std::uint32_t depth = 2; // >= 1
    std::vector<VertexSet> graph_partitions;
    std::vector<std::pair<VertexSet, Vertex>> vertex_partitions;
    ArgmaxOrder argmax_order = ArgmaxOrder::SortedLexicographic;
};

/// (depth-1)-walk index sparsification: greedily removes `count` edges, each
/// time the one whose removal leaves the lexicographically largest ascending
/// tuple of singleton-partition walk indices. batch_size > 1 removes the top
/// edges of one scoring pass at once.
RemovalTrace wis(const Graph& g, std::uint32_t depth, std::size_t count,
                 const SparsifyOptions& opts = {});

/// Degree-based equivalent of wis with depth 2: removes the edge with the
/// lexicographically largest (deg_min, deg_max) pair, then decrements the
/// endpoint degrees. Runs in roughly (N + |E|) log |E| time.
RemovalTrace one_wis(const Graph& g, std::size_t count,
                     TieBreak tie_break = TieBreak::SmallestEdge);

/// General walk index sparsification over arbitrary tracked partitions.
RemovalTrace gwis(const Graph& g, const GwisConfig& config, std::size_t count,
                  const SparsifyOptions& opts = {});

/// Baseline: removes `count` distinct edges uniformly at random.
RemovalTrace random_sparsify(const Graph& g, std::size_t count, std::uint64_t seed);

/// Graph obtained by applying the first `prefix` removals of a trace to g.
Graph apply_removals(const Graph& g, const RemovalTrace& trace, std::size_t prefix);

/// Three-way comparison of score tuples under an argmax order; 0 means the
/// ascending views are identical.
int compare_scores(const ScoreTuple& a, const ScoreTuple& b, ArgmaxOrder order);

} // namespace walkwise
