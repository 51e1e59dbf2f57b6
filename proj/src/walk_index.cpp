#include "walkwise/walk_index.hpp"

#include "walkwise/errors.hpp"
#include "walkwise/parallel.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace walkwise {

ScoreTuple ScoreTuple::from_entries(std::vector<WalkCount> values) {
    ScoreTuple t;
    t.ascending = values;
    std::sort(t.ascending.begin(), t.ascending.end());
    t.entries = std::move(values);
    return t;
}

namespace {

void validate_query(const Graph& g, const WalkIndexQuery& q) {
    if (!q.subset.empty() && q.subset.max_value() >= g.vertex_count()) {
        throw ValidationError("query subset contains vertex out of range");
    }
    if (q.mode.is_vertex() && q.mode.target >= g.vertex_count()) {
        throw ValidationError("query target vertex " + std::to_string(q.mode.target) +
                              " out of range");
    }
}

// Evaluates all queries against one graph state, reusing boundary scratch and
// any walk-matrix powers across queries of the same length.
class QueryEvaluator {
public:
    explicit QueryEvaluator(const Graph& g) : g_(g) {}

    void invalidate() { dense_cache_.clear(); }

    WalkCount evaluate(const WalkIndexQuery& q) {
        g_.boundary_into(q.subset.values(), mark_, origin_);
        if (origin_.empty()) return 0;

        const bool to_all = !q.mode.is_vertex();
        if (to_all) {
            target_.clear();
        } else {
            target_.assign(1, q.mode.target);
        }
        if (q.length == 0) {
            if (to_all) return WalkCount(origin_.size());
            return WalkCount(sorted_intersection_size(origin_, target_));
        }
        if (q.length == 1) {
            return detail::length_one_sum(g_, origin_, target_, to_all);
        }
        const auto& power = power_for(q.length);
        return detail::sum_dense(power, origin_, target_, to_all);
    }

private:
    const DenseIntMatrix& power_for(std::uint32_t length) {
        auto it = dense_cache_.find(length);
        if (it == dense_cache_.end()) {
            it = dense_cache_.emplace(length, dense_power(adjacency_dense(g_), length)).first;
        }
        return it->second;
    }

    const Graph& g_;
    std::vector<char> mark_;
    std::vector<Vertex> origin_;
    std::vector<Vertex> target_;
    std::map<std::uint32_t, DenseIntMatrix> dense_cache_;
};

} // namespace

WalkCount walk_index(const Graph& g, const WalkIndexQuery& query) {
    validate_query(g, query);
    QueryEvaluator eval(g);
    return eval.evaluate(query);
}

std::vector<std::pair<Edge, ScoreTuple>> edge_removal_scores(
    const Graph& g, std::span<const WalkIndexQuery> queries, std::span<const Edge> candidates,
    unsigned threads) {
    for (const auto& q : queries) validate_query(g, q);

    std::vector<Edge> order(candidates.begin(), candidates.end());
    for (auto& e : order) {
        if (e.u == e.v) {
            throw ValidationError("self-loop (" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) + ") among scoring candidates");
        }
        if (!g.has_edge(e)) {
            throw ValidationError("scoring candidate (" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) + ") is not an edge");
        }
        e = make_canonical(e, g.directed());
    }
    std::sort(order.begin(), order.end());
    order.erase(std::unique(order.begin(), order.end()), order.end());

    std::vector<std::pair<Edge, ScoreTuple>> result(order.size());
    parallel_chunks(order.size(), threads, [&](std::size_t begin, std::size_t end) {
        // Each worker scores against its own undo-able copy of the graph.
        Graph local = g;
        QueryEvaluator eval(local);
        for (std::size_t k = begin; k < end; ++k) {
            const Edge e = order[k];
            const EdgeTypeId type = local.edge_type(e);
            local.remove_edge_inplace(e);
            eval.invalidate();
            std::vector<WalkCount> entries;
            entries.reserve(queries.size());
            for (const auto& q : queries) entries.push_back(eval.evaluate(q));
            local.restore_edge(e, type);
            result[k] = {e, ScoreTuple::from_entries(std::move(entries))};
        }
    });
    return result;
}

std::vector<WalkIndexQuery> singleton_queries(std::size_t num_vertices, std::uint32_t length) {
    std::vector<WalkIndexQuery> queries;
    queries.reserve(num_vertices);
    for (Vertex t = 0; t < num_vertices; ++t) {
        queries.push_back(WalkIndexQuery::vertex_level(length, VertexSet{t}, t));
    }
    return queries;
}

} // namespace walkwise
