#include "walkwise/sparsify.hpp"

#include "walkwise/errors.hpp"
#include "walkwise/rng.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace walkwise {

namespace {

void require_undirected(const Graph& g, const char* what) {
    if (g.directed()) {
        throw ValidationError(std::string(what) + " operates on undirected graphs");
    }
}

bool edge_preferred(Edge a, Edge b, TieBreak tie_break) {
    return tie_break == TieBreak::SmallestEdge ? a < b : b < a;
}

RemovalTrace greedy_walk_index_run(std::string algorithm, const Graph& g,
                                   std::span<const WalkIndexQuery> queries, ArgmaxOrder order,
                                   std::uint32_t depth, std::size_t count,
                                   const SparsifyOptions& opts) {
    if (opts.batch_size == 0) throw ValidationError("batch size must be at least 1");

    RemovalTrace trace;
    trace.algorithm = std::move(algorithm);
    trace.depth = depth;
    trace.batch_size = opts.batch_size;
    trace.tie_break = opts.tie_break;
    trace.requested = count;

    Graph work = g;
    std::size_t removed = 0;
    std::size_t pass = 0;
    while (removed < count && work.edge_count() > 0) {
        ++pass;
        const std::vector<Edge> candidates = work.edges();
        auto scores = edge_removal_scores(work, queries, candidates, opts.threads);

        std::vector<std::size_t> by_rank(scores.size());
        std::iota(by_rank.begin(), by_rank.end(), 0);
        auto better = [&](std::size_t a, std::size_t b) {
            const int c = compare_scores(scores[a].second, scores[b].second, order);
            if (c != 0) return c > 0;
            return edge_preferred(scores[a].first, scores[b].first, opts.tie_break);
        };
        const std::size_t take = std::min({opts.batch_size, count - removed, scores.size()});
        std::partial_sort(by_rank.begin(), by_rank.begin() + static_cast<long>(take),
                          by_rank.end(), better);

        for (std::size_t k = 0; k < take; ++k) {
            auto& [edge, score] = scores[by_rank[k]];
            work.remove_edge_inplace(edge);
            trace.removed.push_back({pass, edge, SelectionScore(std::move(score.ascending))});
            ++removed;
        }
    }
    trace.exhausted = removed < count;
    trace.final_graph = std::move(work);
    return trace;
}

} // namespace

int compare_scores(const ScoreTuple& a, const ScoreTuple& b, ArgmaxOrder order) {
    auto lex = [&]() -> int {
        if (a.ascending < b.ascending) return -1;
        if (b.ascending < a.ascending) return 1;
        return 0;
    };
    switch (order) {
        case ArgmaxOrder::SortedLexicographic:
            return lex();
        case ArgmaxOrder::Sum: {
            WalkCount sa = 0, sb = 0;
            for (const auto& x : a.entries) sa += x;
            for (const auto& x : b.entries) sb += x;
            if (sa != sb) return sa < sb ? -1 : 1;
            return lex();
        }
        case ArgmaxOrder::Min: {
            const WalkCount& ma = a.ascending.front();
            const WalkCount& mb = b.ascending.front();
            if (ma != mb) return ma < mb ? -1 : 1;
            return lex();
        }
        case ArgmaxOrder::Max: {
            const WalkCount& ma = a.ascending.back();
            const WalkCount& mb = b.ascending.back();
            if (ma != mb) return ma < mb ? -1 : 1;
            return lex();
        }
    }
    return 0;
}

RemovalTrace wis(const Graph& g, std::uint32_t depth, std::size_t count,
                 const SparsifyOptions& opts) {
    require_undirected(g, "wis");
    if (depth < 2) {
        throw ValidationError(
            "wis requires depth >= 2; for the degree-based depth-2 fast path use one_wis, "
            "and for length-0 walk indices query walk_index directly");
    }
    const auto queries = singleton_queries(g.vertex_count(), depth - 1);
    return greedy_walk_index_run("wis", g, queries, ArgmaxOrder::SortedLexicographic, depth,
                                 count, opts);
}

RemovalTrace gwis(const Graph& g, const GwisConfig& config, std::size_t count,
                  const SparsifyOptions& opts) {
    require_undirected(g, "gwis");
    if (config.depth < 1) throw ValidationError("gwis requires depth >= 1");
    if (config.graph_partitions.empty() && config.vertex_partitions.empty()) {
        throw ValidationError("gwis requires at least one tracked partition");
    }
    std::vector<WalkIndexQuery> queries;
    queries.reserve(config.graph_partitions.size() + config.vertex_partitions.size());
    for (const auto& subset : config.graph_partitions) {
        queries.push_back(WalkIndexQuery::graph_level(config.depth - 1, subset));
    }
    for (const auto& [subset, target] : config.vertex_partitions) {
        if (target >= g.vertex_count()) {
            throw ValidationError("gwis target vertex " + std::to_string(target) +
                                  " out of range");
        }
        queries.push_back(WalkIndexQuery::vertex_level(config.depth - 1, subset, target));
    }
    return greedy_walk_index_run("gwis", g, queries, config.argmax_order, config.depth, count,
                                 opts);
}

RemovalTrace one_wis(const Graph& g, std::size_t count, TieBreak tie_break) {
    require_undirected(g, "one_wis");

    RemovalTrace trace;
    trace.algorithm = "1-wis";
    trace.depth = 2;
    trace.tie_break = tie_break;
    trace.requested = count;

    const std::vector<Edge> edges = g.edges();
    std::vector<std::size_t> degree(g.vertex_count());
    for (Vertex i = 0; i < g.vertex_count(); ++i) degree[i] = g.degree(i);

    struct HeapEntry {
        DegreePair key;
        Edge edge;
        std::uint32_t index;
    };
    auto below = [&](const HeapEntry& a, const HeapEntry& b) {
        if (a.key.deg_min != b.key.deg_min) return a.key.deg_min < b.key.deg_min;
        if (a.key.deg_max != b.key.deg_max) return a.key.deg_max < b.key.deg_max;
        return edge_preferred(b.edge, a.edge, tie_break);
    };
    auto key_of = [&](Edge e) {
        return DegreePair{std::min(degree[e.u], degree[e.v]), std::max(degree[e.u], degree[e.v])};
    };

    // Degrees only decrease, so stale heap entries always overstate their
    // edge's key; popping, refreshing, and reinserting keeps the argmax exact.
    std::priority_queue<HeapEntry, std::vector<HeapEntry>, decltype(below)> heap(below);
    std::vector<char> alive(edges.size(), 1);
    for (std::uint32_t k = 0; k < edges.size(); ++k) {
        heap.push({key_of(edges[k]), edges[k], k});
    }

    std::size_t removed = 0;
    while (removed < count && !heap.empty()) {
        HeapEntry top = heap.top();
        heap.pop();
        if (!alive[top.index]) continue;
        const DegreePair current = key_of(top.edge);
        if (current != top.key) {
            heap.push({current, top.edge, top.index});
            continue;
        }
        alive[top.index] = 0;
        --degree[top.edge.u];
        --degree[top.edge.v];
        ++removed;
        trace.removed.push_back({removed, top.edge, SelectionScore(current)});
    }
    trace.exhausted = removed < count;

    std::vector<Edge> surviving;
    surviving.reserve(edges.size() - removed);
    for (std::size_t k = 0; k < edges.size(); ++k) {
        if (alive[k]) surviving.push_back(edges[k]);
    }
    trace.final_graph = Graph::build(surviving, g.vertex_count(), false);
    return trace;
}

RemovalTrace random_sparsify(const Graph& g, std::size_t count, std::uint64_t seed) {
    require_undirected(g, "random_sparsify");

    RemovalTrace trace;
    trace.algorithm = "random";
    trace.seed = seed;
    trace.requested = count;

    std::vector<Edge> edges = g.edges();
    DeterministicRng rng(seed);
    const std::size_t take = std::min(count, edges.size());
    for (std::size_t k = 0; k < take; ++k) {
        const std::size_t j = k + rng.below(edges.size() - k);
        std::swap(edges[k], edges[j]);
        trace.removed.push_back({k + 1, edges[k], SelectionScore{}});
    }
    trace.exhausted = count > edges.size();

    std::vector<Edge> surviving(edges.begin() + static_cast<long>(take), edges.end());
    std::sort(surviving.begin(), surviving.end());
    trace.final_graph = Graph::build(surviving, g.vertex_count(), false);
    return trace;
}

Graph apply_removals(const Graph& g, const RemovalTrace& trace, std::size_t prefix) {
    Graph work = g;
    const std::size_t take = std::min(prefix, trace.removed.size());
    for (std::size_t k = 0; k < take; ++k) {
        work.remove_edge_inplace(trace.removed[k].edge);
    }
    return work;
}

} // namespace walkwise
