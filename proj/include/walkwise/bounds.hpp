#pragma once

#include "walkwise/graph.hpp"
#include "walkwise/types.hpp"
#include "walkwise/vertex_set.hpp"

#include <cstdint>
#include <vector>

namespace walkwise {

inline constexpr std::size_t kDefaultSubsetGuard = 16;

/// Multiset coefficient binom(D + P - 1, P): the number of D-part
/// compositions of P, and the rank ceiling of the P-th Hadamard power of a
/// rank-D Gram matrix.
WalkCount multiset_coefficient(std::uint64_t d, std::uint64_t p);

/// A pair (inside, outside) with inside in I, outside in I^c and no
/// repeating shared neighbors, realizing the admissible subset
/// N(inside) & N(outside).
struct AdmissibleSubset {
    VertexSet subset;
    VertexSet inside;
    VertexSet outside;
};

/// All admissible subsets of the boundary of (I, I^c), each with the first
/// realizing pair found in canonical enumeration order. The empty set is
/// always present. Directed graphs use out-neighborhoods and the
/// one-incoming-neighbor condition. Enumeration is exponential in |V|, hence
/// the size guard.
std::vector<AdmissibleSubset> admissible_subsets_with_realizers(
    const Graph& g, const VertexSet& subset, std::size_t max_vertices = kDefaultSubsetGuard);

std::vector<VertexSet> admissible_subsets(const Graph& g, const VertexSet& subset,
                                          std::size_t max_vertices = kDefaultSubsetGuard);

/// Separation-rank bounds for one partition, in exact exponent form plus
/// natural-log form for comparison.
///
/// upper_exponent bounds log_{hidden_dim}(separation rank): 4*walks + 1 for
/// undirected graph prediction, 4*walks for undirected vertex prediction,
/// and the per-layer walk sum (plus 1 for graph prediction) in directed
/// mode. lower_log is the best admissible-subset bound log(alpha) * walks;
/// zero walk counts contribute zero.
struct BoundReport {
    std::uint32_t depth = 1;
    std::uint32_t input_dim = 1;
    std::uint32_t hidden_dim = 1;
    PredictionMode mode;
    bool directed = false;

    WalkCount boundary_walks;  // walks of length depth-1 from the boundary
    WalkCount upper_exponent;
    double upper_log = 0.0;
    double lower_log = 0.0;
    VertexSet maximizer;       // admissible subset attaining lower_log
    WalkCount maximizer_walks; // its walk count
};

BoundReport bound_report(const Graph& g, const VertexSet& subset, std::uint32_t depth,
                         std::uint32_t input_dim, std::uint32_t hidden_dim, PredictionMode mode,
                         std::size_t max_vertices = kDefaultSubsetGuard);

} // namespace walkwise
