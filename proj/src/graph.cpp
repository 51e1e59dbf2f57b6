#include "walkwise/graph.hpp"

#include "walkwise/errors.hpp"

#include <algorithm>
#include <string>

namespace walkwise {

namespace {

std::string edge_str(Edge e) {
    return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

// Removes v from a sorted list, returning its position for aligned type lists.
std::size_t erase_sorted(std::vector<Vertex>& list, Vertex v) {
    auto it = std::lower_bound(list.begin(), list.end(), v);
    std::size_t pos = static_cast<std::size_t>(it - list.begin());
    list.erase(it);
    return pos;
}

} // namespace

Graph Graph::build(std::span<const Edge> edges, std::size_t num_vertices, bool directed,
                   std::span<const EdgeTypeId> edge_types) {
    if (!edge_types.empty() && !directed) {
        throw ValidationError("edge types are only supported for directed graphs");
    }
    if (!edge_types.empty() && edge_types.size() != edges.size()) {
        throw ValidationError("edge type list does not match edge list length");
    }

    Graph g;
    g.directed_ = directed;
    g.typed_ = !edge_types.empty();
    g.out_.resize(num_vertices);
    if (directed) g.in_.resize(num_vertices);
    if (g.typed_) {
        g.out_types_.resize(num_vertices);
        g.in_types_.resize(num_vertices);
    }

    std::vector<Edge> canon(edges.size());
    for (std::size_t k = 0; k < edges.size(); ++k) {
        Edge e = edges[k];
        if (e.u >= num_vertices || e.v >= num_vertices) {
            throw ValidationError("edge " + edge_str(e) + " has an endpoint out of range");
        }
        if (e.u == e.v) {
            throw ValidationError("explicit self-loop " + edge_str(e) +
                                  " in input (self-loops are implicit)");
        }
        canon[k] = make_canonical(e, directed);
    }
    {
        std::vector<Edge> sorted = canon;
        std::sort(sorted.begin(), sorted.end());
        auto dup = std::adjacent_find(sorted.begin(), sorted.end());
        if (dup != sorted.end()) {
            throw ValidationError("duplicate edge " + edge_str(*dup));
        }
    }

    for (std::size_t k = 0; k < canon.size(); ++k) {
        Edge e = canon[k];
        g.out_[e.u].push_back(e.v);
        if (directed) {
            g.in_[e.v].push_back(e.u);
        } else {
            g.out_[e.v].push_back(e.u);
        }
        if (g.typed_) {
            g.out_types_[e.u].push_back(edge_types[k]);
            g.in_types_[e.v].push_back(edge_types[k]);
            g.type_count_ = std::max(g.type_count_, edge_types[k] + 1);
        }
    }
    g.edge_count_ = canon.size();

    // Sort adjacency, keeping type lists aligned.
    for (std::size_t i = 0; i < num_vertices; ++i) {
        auto sort_aligned = [](std::vector<Vertex>& adj, std::vector<EdgeTypeId>* types) {
            if (types == nullptr) {
                std::sort(adj.begin(), adj.end());
                return;
            }
            std::vector<std::pair<Vertex, EdgeTypeId>> zipped(adj.size());
            for (std::size_t k = 0; k < adj.size(); ++k) zipped[k] = {adj[k], (*types)[k]};
            std::sort(zipped.begin(), zipped.end());
            for (std::size_t k = 0; k < adj.size(); ++k) {
                adj[k] = zipped[k].first;
                (*types)[k] = zipped[k].second;
            }
        };
        sort_aligned(g.out_[i], g.typed_ ? &g.out_types_[i] : nullptr);
        if (directed) sort_aligned(g.in_[i], g.typed_ ? &g.in_types_[i] : nullptr);
    }
    return g;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> result;
    result.reserve(edge_count_);
    for (Vertex i = 0; i < out_.size(); ++i) {
        for (Vertex j : out_[i]) {
            if (directed_ || i < j) result.push_back({i, j});
        }
    }
    return result;
}

std::vector<std::pair<Edge, EdgeTypeId>> Graph::typed_edges() const {
    std::vector<std::pair<Edge, EdgeTypeId>> result;
    result.reserve(edge_count_);
    for (Vertex i = 0; i < out_.size(); ++i) {
        for (std::size_t k = 0; k < out_[i].size(); ++k) {
            Vertex j = out_[i][k];
            if (directed_ || i < j) {
                result.push_back({{i, j}, typed_ ? out_types_[i][k] : 0});
            }
        }
    }
    return result;
}

void Graph::check_vertex(Vertex i) const {
    if (i >= out_.size()) {
        throw ValidationError("vertex " + std::to_string(i) + " out of range");
    }
}

VertexSet Graph::neighbors(Vertex i, Direction dir) const {
    check_vertex(i);
    if ((dir == Direction::Undirected) != !directed_) {
        throw ValidationError("neighbor direction does not match graph mode");
    }
    const auto& adj = (dir == Direction::In) ? in_[i] : out_[i];
    std::vector<Vertex> members(adj.begin(), adj.end());
    members.push_back(i);
    return VertexSet(std::move(members));
}

bool Graph::has_walk_step(Vertex from, Vertex to) const {
    if (from == to) return true;
    return std::binary_search(out_[from].begin(), out_[from].end(), to);
}

bool Graph::has_edge(Edge e) const {
    if (e.u >= out_.size() || e.v >= out_.size() || e.u == e.v) return false;
    e = make_canonical(e, directed_);
    return std::binary_search(out_[e.u].begin(), out_[e.u].end(), e.v);
}

EdgeTypeId Graph::edge_type(Edge e) const {
    if (!typed_) return 0;
    e = checked_canonical(e);
    auto it = std::lower_bound(out_[e.u].begin(), out_[e.u].end(), e.v);
    return out_types_[e.u][static_cast<std::size_t>(it - out_[e.u].begin())];
}

VertexSet Graph::boundary(const VertexSet& subset) const {
    if (!subset.empty()) check_vertex(subset.max_value());
    std::vector<char> mark;
    std::vector<Vertex> out;
    boundary_into(subset.values(), mark, out);
    return VertexSet(std::move(out));
}

void Graph::boundary_into(std::span<const Vertex> members, std::vector<char>& mark,
                          std::vector<Vertex>& out) const {
    mark.assign(out_.size(), 0);
    for (Vertex i : members) mark[i] = 1;
    out.clear();
    for (Vertex i : members) {
        bool crossed = false;
        // A crossing edge into i: undirected {i,j}, or directed arc (j,i).
        for (Vertex j : (directed_ ? in_[i] : out_[i])) {
            if (!mark[j]) {
                crossed = true;
                break;
            }
        }
        if (crossed) out.push_back(i);
        // A crossing edge out of i gives the far endpoint an incoming
        // crossing edge.
        for (Vertex j : out_[i]) {
            if (!mark[j]) out.push_back(j);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
}

Edge Graph::checked_canonical(Edge e) const {
    check_vertex(e.u);
    check_vertex(e.v);
    if (e.u == e.v) {
        throw ValidationError("self-loop " + edge_str(e) + " cannot be removed");
    }
    e = make_canonical(e, directed_);
    if (!std::binary_search(out_[e.u].begin(), out_[e.u].end(), e.v)) {
        throw ValidationError("edge " + edge_str(e) + " is not present");
    }
    return e;
}

Graph Graph::without_edge(Edge e) const {
    Graph copy = *this;
    copy.remove_edge_inplace(e);
    return copy;
}

void Graph::remove_edge_inplace(Edge e) {
    e = checked_canonical(e);
    std::size_t pos_out = erase_sorted(out_[e.u], e.v);
    if (typed_) out_types_[e.u].erase(out_types_[e.u].begin() + static_cast<long>(pos_out));
    if (directed_) {
        std::size_t pos_in = erase_sorted(in_[e.v], e.u);
        if (typed_) in_types_[e.v].erase(in_types_[e.v].begin() + static_cast<long>(pos_in));
    } else {
        erase_sorted(out_[e.v], e.u);
    }
    --edge_count_;
}

void Graph::restore_edge(Edge e, EdgeTypeId type) {
    check_vertex(e.u);
    check_vertex(e.v);
    if (e.u == e.v) throw ValidationError("self-loop " + edge_str(e) + " cannot be restored");
    e = make_canonical(e, directed_);
    if (std::binary_search(out_[e.u].begin(), out_[e.u].end(), e.v)) {
        throw ValidationError("edge " + edge_str(e) + " already present");
    }
    auto insert_with_type = [&](std::vector<Vertex>& adj, std::vector<EdgeTypeId>* types,
                                Vertex value) {
        auto it = std::lower_bound(adj.begin(), adj.end(), value);
        if (types != nullptr) {
            types->insert(types->begin() + (it - adj.begin()), type);
        }
        adj.insert(it, value);
    };
    insert_with_type(out_[e.u], typed_ ? &out_types_[e.u] : nullptr, e.v);
    if (directed_) {
        insert_with_type(in_[e.v], typed_ ? &in_types_[e.v] : nullptr, e.u);
    } else {
        insert_with_type(out_[e.v], nullptr, e.u);
    }
    ++edge_count_;
}

} // namespace walkwise
