#pragma once

#include "walkwise/graph.hpp"
#include "walkwise/types.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace walkwise {

/// Parsed edge-list text: one edge per line as two whitespace-separated
/// decimal vertex ids, with an optional third field holding the edge type id
/// (directed mode only). Lines starting with '#' and blank lines are
/// ignored. Self-loops never appear.
struct EdgeListData {
    std::vector<Edge> edges;
    std::vector<EdgeTypeId> types; // empty unless any line carried a type
    Vertex max_vertex = 0;         // 0 also when there are no edges
};

EdgeListData read_edge_list(std::istream& in, bool directed);

/// Loads and validates a graph. Vertex count is taken from `num_vertices`
/// when given, otherwise inferred as max id + 1.
Graph load_graph(const std::string& path, bool directed,
                 std::optional<std::size_t> num_vertices = std::nullopt);

/// Canonical edge-list output: self-loops omitted, edges in canonical order,
/// type column present only for typed graphs.
void write_edge_list(std::ostream& out, const Graph& g);
void save_edge_list(const std::string& path, const Graph& g);

} // namespace walkwise
