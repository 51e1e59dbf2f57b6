#pragma once

#include "walkwise/types.hpp"
#include "walkwise/vertex_set.hpp"

#include <optional>
#include <span>
#include <vector>

namespace walkwise {

enum class Direction { Undirected, In, Out };

/// Immutable-by-convention multihop graph with mandatory self-loops.
///
/// Self-loops exist for every vertex but are stored implicitly: adjacency
/// lists hold non-self neighbors only, and every query that is defined in
/// terms of N(i) accounts for i itself. Input data therefore never contains
/// self-loops and they can never be removed.
///
/// The graph is safe to share across threads once built. The in-place
/// remove/restore pair exists for hot scoring loops; a graph being mutated
/// that way must have a single owner.
class Graph {
public:
    Graph() = default;

    /// Validates and builds a graph. Endpoints must be < num_vertices, no
    /// pair may be a self-loop, and no edge may appear twice (in undirected
    /// mode {i,j} and {j,i} are the same edge). Edge types are only legal in
    /// directed mode; `edge_types`, when given, is aligned with `edges`.
    static Graph build(std::span<const Edge> edges, std::size_t num_vertices, bool directed,
                       std::span<const EdgeTypeId> edge_types = {});

    std::size_t vertex_count() const { return out_.size(); }
    bool directed() const { return directed_; }
    bool typed() const { return typed_; }
    std::size_t edge_count() const { return edge_count_; }

    /// Number of distinct edge types; 1 when untyped. Implicit self-loops
    /// carry type 0.
    EdgeTypeId edge_type_count() const { return type_count_; }

    /// Current non-self-loop edges in canonical order (sorted pairs; arcs in
    /// directed mode). Rebuilt from adjacency on each call.
    std::vector<Edge> edges() const;
    /// Same, with the type of each edge (directed typed graphs).
    std::vector<std::pair<Edge, EdgeTypeId>> typed_edges() const;

    /// N(i) including i itself. Direction must be Undirected exactly when the
    /// graph is undirected.
    VertexSet neighbors(Vertex i, Direction dir) const;

    /// |N(i)| with the self-loop counted. Directed graphs report the
    /// out-neighborhood size here; use in_degree for the other side.
    std::size_t degree(Vertex i) const { return out_[i].size() + 1; }
    std::size_t in_degree(Vertex i) const { return (directed_ ? in_[i] : out_[i]).size() + 1; }

    /// Non-self neighbors, sorted. In undirected mode both spans coincide.
    std::span<const Vertex> adjacent_out(Vertex i) const { return out_[i]; }
    std::span<const Vertex> adjacent_in(Vertex i) const { return directed_ ? in_[i] : out_[i]; }
    /// Types aligned with adjacent_in(i); only valid on typed graphs.
    std::span<const EdgeTypeId> adjacent_in_types(Vertex i) const { return in_types_[i]; }

    /// Adjacency-matrix entry including the implicit self-loop diagonal.
    bool has_walk_step(Vertex from, Vertex to) const;
    bool has_edge(Edge e) const;
    EdgeTypeId edge_type(Edge e) const;

    /// Boundary of the partition (I, I^c): vertices incident to a crossing
    /// edge. Directed graphs use the incoming-edge-crossing definition. With
    /// self-loops this coincides with the shared neighbors of I and I^c.
    VertexSet boundary(const VertexSet& subset) const;
    void boundary_into(std::span<const Vertex> members, std::vector<char>& mark_scratch,
                       std::vector<Vertex>& out) const;

    /// Persistent removal: a copy without edge e. e must exist and must not
    /// be a self-loop.
    Graph without_edge(Edge e) const;

    /// Undo-able removal pair for scoring loops. restore_edge must receive an
    /// edge that was previously removed (with its original type).
    void remove_edge_inplace(Edge e);
    void restore_edge(Edge e, EdgeTypeId type = 0);

    friend bool operator==(const Graph& a, const Graph& b) = default;

private:
    void check_vertex(Vertex i) const;
    Edge checked_canonical(Edge e) const;

    bool directed_ = false;
    bool typed_ = false;
    EdgeTypeId type_count_ = 1;
    std::size_t edge_count_ = 0;
    std::vector<std::vector<Vertex>> out_;
    std::vector<std::vector<Vertex>> in_;            // directed only
    std::vector<std::vector<EdgeTypeId>> out_types_; // typed only, aligned with out_
    std::vector<std::vector<EdgeTypeId>> in_types_;  // typed only, aligned with in_
};

} // namespace walkwise
