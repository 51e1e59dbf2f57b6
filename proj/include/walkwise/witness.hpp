#pragma once

#include "walkwise/bounds.hpp"
#include "walkwise/gnn.hpp"
#include "walkwise/graph.hpp"
#include "walkwise/matrix.hpp"
#include "walkwise/types.hpp"

#include <cstdint>
#include <vector>

namespace walkwise {

/// Explicit weights and templates certifying the lower bound for one
/// partition: the designated sub-matrix of the grid matricization (rows fix
/// the inside realizer to one template, columns fix the outside realizer to
/// another, all remaining vertices take the all-ones template) has exact
/// rank multiset(D, walks).
struct LowerBoundWitness {
    RationalGnn weights;
    TemplateSet templates; // witness templates plus trailing all-ones vector
    Rational gamma;
    VertexSet subset;      // admissible subset the witness targets
    VertexSet inside;      // realizer inside I
    VertexSet outside;     // realizer inside I^c
    WalkCount walks;       // walks of length depth-1 from subset
    WalkCount expected_rank;
    std::size_t achieved_rank = 0;
    RationalMatrix designated; // the verified sub-matrix
};

/// Builds and verifies the witness for the admissible subset maximizing the
/// lower bound. Requires depth >= 2 and some admissible subset with a
/// positive walk count; refuses when the witness size exceeds the budget.
LowerBoundWitness lower_bound_witness(const Graph& g, const VertexSet& subset,
                                      std::uint32_t depth, std::uint32_t input_dim,
                                      std::uint32_t hidden_dim, PredictionMode mode,
                                      std::size_t budget = 1'000'000,
                                      std::size_t max_vertices = kDefaultSubsetGuard);

/// Weight assignment of the depth >= 2 witness: layer 1 is a zero-padded
/// identity, layer 2 is all-ones in its first row, deeper layers keep only
/// the (1,1) entry, and the output row reads the first coordinate. Typed
/// graphs share the same matrix across all edge types.
RationalGnn witness_weights(std::uint32_t depth, std::uint32_t input_dim,
                            std::uint32_t hidden_dim, std::uint32_t edge_types = 1);

/// Depth-1 witness: zero-padded identity first layer with an all-ones output
/// row. Its grid rank over the basis templates is exactly min(input_dim,
/// hidden_dim) on connected graphs.
RationalGnn depth_one_witness_weights(std::uint32_t input_dim, std::uint32_t hidden_dim);

/// The D = min(input_dim, hidden_dim) standard basis vectors, zero-padded to
/// input_dim.
TemplateSet depth_one_witness_templates(std::uint32_t input_dim, std::uint32_t hidden_dim);

/// All D-part compositions of total, in lexicographic order.
std::vector<std::vector<std::uint32_t>> multiset_configurations(std::uint32_t parts,
                                                                std::uint32_t total);

/// Fixed, deterministic sequence of positive rational gamma candidates tried
/// by the witness construction.
std::vector<Rational> gamma_candidates();

} // namespace walkwise
