#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace walkwise::oracle {

namespace {

void extend_walk(const Graph& g, Vertex at, std::uint32_t remaining, const VertexSet& to,
                 WalkCount& total) {
    if (remaining == 0) {
        if (to.contains(at)) ++total;
        return;
    }
    extend_walk(g, at, remaining - 1, to, total); // self-loop step
    for (Vertex next : g.adjacent_out(at)) extend_walk(g, next, remaining - 1, to, total);
}

} // namespace

WalkCount dfs_count_walks(const Graph& g, std::uint32_t length, const VertexSet& from,
                          const VertexSet& to) {
    WalkCount total = 0;
    for (Vertex start : from.values()) extend_walk(g, start, length, to, total);
    return total;
}

WalkCount walk_index_reference(const Graph& g, const WalkIndexQuery& query) {
    // Shared-neighbor characterization of the boundary; the production code
    // builds it from crossing edges.
    const VertexSet inside = query.subset;
    const VertexSet outside = inside.complement(g.vertex_count());
    auto neighborhood = [&](const VertexSet& members) {
        std::vector<Vertex> acc;
        for (Vertex i : members.values()) {
            acc.push_back(i);
            for (Vertex j : g.adjacent_out(i)) acc.push_back(j);
        }
        return VertexSet(std::move(acc));
    };
    const VertexSet lhs = neighborhood(inside);
    const VertexSet rhs = neighborhood(outside);
    std::vector<Vertex> shared;
    for (Vertex v : lhs.values()) {
        if (rhs.contains(v)) shared.push_back(v);
    }
    const VertexSet boundary(std::move(shared));
    if (boundary.empty()) return 0;

    const VertexSet ends = query.mode.is_vertex() ? VertexSet{query.mode.target}
                                                  : VertexSet::full(g.vertex_count());
    return dfs_count_walks(g, query.length, boundary, ends);
}

namespace {

bool prefer_edge(Edge a, Edge b, TieBreak tie_break) {
    return tie_break == TieBreak::SmallestEdge ? a < b : b < a;
}

RemovalTrace naive_greedy(const Graph& g, std::span<const WalkIndexQuery> queries,
                          ArgmaxOrder order, std::size_t count, TieBreak tie_break,
                          std::string name, std::uint32_t depth) {
    RemovalTrace trace;
    trace.algorithm = std::move(name);
    trace.depth = depth;
    trace.tie_break = tie_break;
    trace.requested = count;

    Graph work = g;
    std::size_t removed = 0;
    while (removed < count && work.edge_count() > 0) {
        const std::vector<Edge> candidates = work.edges();
        std::vector<ScoreTuple> scores;
        scores.reserve(candidates.size());
        for (Edge e : candidates) {
            const Graph probe = work.without_edge(e); // fresh copy each time
            std::vector<WalkCount> entries;
            for (const auto& q : queries) entries.push_back(walk_index_reference(probe, q));
            scores.push_back(ScoreTuple::from_entries(std::move(entries)));
        }
        std::size_t best = 0;
        for (std::size_t k = 1; k < candidates.size(); ++k) {
            const int c = compare_scores(scores[k], scores[best], order);
            if (c > 0 || (c == 0 && prefer_edge(candidates[k], candidates[best], tie_break))) {
                best = k;
            }
        }
        ++removed;
        trace.removed.push_back(
            {removed, candidates[best], SelectionScore(std::move(scores[best].ascending))});
        work.remove_edge_inplace(candidates[best]);
    }
    trace.exhausted = removed < count;
    trace.final_graph = std::move(work);
    return trace;
}

} // namespace

RemovalTrace naive_wis(const Graph& g, std::uint32_t depth, std::size_t count,
                       TieBreak tie_break) {
    const auto queries = singleton_queries(g.vertex_count(), depth - 1);
    return naive_greedy(g, queries, ArgmaxOrder::SortedLexicographic, count, tie_break, "wis",
                        depth);
}

RemovalTrace naive_gwis(const Graph& g, const GwisConfig& config, std::size_t count,
                        TieBreak tie_break) {
    std::vector<WalkIndexQuery> queries;
    for (const auto& subset : config.graph_partitions) {
        queries.push_back(WalkIndexQuery::graph_level(config.depth - 1, subset));
    }
    for (const auto& [subset, target] : config.vertex_partitions) {
        queries.push_back(WalkIndexQuery::vertex_level(config.depth - 1, subset, target));
    }
    return naive_greedy(g, queries, config.argmax_order, count, tie_break, "gwis", config.depth);
}

RemovalTrace naive_one_wis(const Graph& g, std::size_t count, TieBreak tie_break) {
    RemovalTrace trace;
    trace.algorithm = "1-wis";
    trace.depth = 2;
    trace.tie_break = tie_break;
    trace.requested = count;

    std::vector<Edge> edges = g.edges();
    std::vector<std::size_t> degree(g.vertex_count());
    for (Vertex i = 0; i < g.vertex_count(); ++i) degree[i] = g.degree(i);

    std::size_t removed = 0;
    while (removed < count && !edges.empty()) {
        std::size_t best = 0;
        auto key = [&](Edge e) {
            return std::pair(std::min(degree[e.u], degree[e.v]),
                             std::max(degree[e.u], degree[e.v]));
        };
        for (std::size_t k = 1; k < edges.size(); ++k) {
            const auto ka = key(edges[k]);
            const auto kb = key(edges[best]);
            if (ka > kb || (ka == kb && prefer_edge(edges[k], edges[best], tie_break))) best = k;
        }
        const Edge chosen = edges[best];
        const auto [dmin, dmax] = key(chosen);
        ++removed;
        trace.removed.push_back({removed, chosen, SelectionScore(DegreePair{dmin, dmax})});
        --degree[chosen.u];
        --degree[chosen.v];
        edges.erase(edges.begin() + static_cast<long>(best));
    }
    trace.exhausted = removed < count;

    trace.final_graph = Graph::build(edges, g.vertex_count(), false);
    return trace;
}

std::size_t rank_reference(const RationalMatrix& m) {
    // Eliminate the transpose, choosing as pivot the row whose leading entry
    // has the largest |numerator| * denominator product. Any pivot rule gives
    // the same rank; a different one exercises different arithmetic paths.
    RationalMatrix t(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
    }
    const std::size_t rows = t.rows();
    const std::size_t cols = t.cols();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rows;
        WalkCount pivot_weight = 0;
        for (std::size_t r = rank; r < rows; ++r) {
            if (t(r, col).is_zero()) continue;
            WalkCount weight =
                abs(boost::multiprecision::numerator(t(r, col))) *
                boost::multiprecision::denominator(t(r, col));
            if (pivot == rows || weight > pivot_weight) {
                pivot = r;
                pivot_weight = std::move(weight);
            }
        }
        if (pivot == rows) continue;
        if (pivot != rank) {
            for (std::size_t c = col; c < cols; ++c) std::swap(t(pivot, c), t(rank, c));
        }
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (t(r, col).is_zero()) continue;
            const Rational factor = t(r, col) / t(rank, col);
            t(r, col) = 0;
            for (std::size_t c = col + 1; c < cols; ++c) t(r, c) -= factor * t(rank, c);
        }
        ++rank;
    }
    return rank;
}

Graph random_graph(DeterministicRng& rng, std::size_t num_vertices, std::uint64_t prob_num,
                   std::uint64_t prob_den, bool directed) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < num_vertices; ++u) {
        for (Vertex v = directed ? 0 : u + 1; v < num_vertices; ++v) {
            if (u == v) continue;
            if (rng.below(prob_den) < prob_num) edges.push_back({u, v});
        }
    }
    return Graph::build(edges, num_vertices, directed);
}

VertexSet random_subset(DeterministicRng& rng, std::size_t num_vertices) {
    std::vector<Vertex> members;
    for (Vertex v = 0; v < num_vertices; ++v) {
        if (rng.coin()) members.push_back(v);
    }
    return VertexSet(std::move(members));
}

} // namespace walkwise::oracle
