#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>

namespace walkwise {

using Vertex = std::uint32_t;
using EdgeTypeId = std::uint32_t;

// Exact walk count. Counts grow like d^l, so fixed-width integers overflow
// quickly and floating point corrupts tie structure in greedy argmax.
using WalkCount = boost::multiprecision::cpp_int;

// Exact rational scalar for the verification path.
using Rational = boost::multiprecision::cpp_rational;

// A non-self-loop edge. Undirected edges are stored with u < v; directed
// edges are ordered arcs.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_canonical(Edge e, bool directed) {
    if (!directed && e.v < e.u) return {e.v, e.u};
    return e;
}

enum class PredictionKind { GraphLevel, VertexLevel };

// Task the bounds/GNN machinery is evaluated for. target is meaningful only
// for VertexLevel.
struct PredictionMode {
    PredictionKind kind = PredictionKind::GraphLevel;
    Vertex target = 0;

    static PredictionMode graph() { return {PredictionKind::GraphLevel, 0}; }
    static PredictionMode vertex(Vertex t) { return {PredictionKind::VertexLevel, t}; }
    bool is_vertex() const { return kind == PredictionKind::VertexLevel; }
};

} // namespace walkwise
