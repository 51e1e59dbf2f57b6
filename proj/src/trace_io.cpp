#include "walkwise/trace_io.hpp"

#include <ostream>
#include <sstream>

namespace walkwise {

namespace {

void fnv_mix(std::uint64_t& h, std::uint64_t value) {
    for (int byte = 0; byte < 8; ++byte) {
        h ^= (value >> (byte * 8)) & 0xffu;
        h *= 1099511628211ull;
    }
}

} // namespace

std::uint64_t graph_fingerprint(const Graph& g) {
    std::uint64_t h = 1469598103934665603ull;
    fnv_mix(h, g.vertex_count());
    fnv_mix(h, g.directed() ? 1 : 0);
    for (const auto& [edge, type] : g.typed_edges()) {
        fnv_mix(h, edge.u);
        fnv_mix(h, edge.v);
        fnv_mix(h, type);
    }
    return h;
}

namespace {

std::string score_summary(const SelectionScore& score) {
    if (std::holds_alternative<std::monostate>(score)) return "-";
    if (const auto* pair = std::get_if<DegreePair>(&score)) {
        return "deg:" + std::to_string(pair->deg_min) + "," + std::to_string(pair->deg_max);
    }
    const auto& tuple = std::get<std::vector<WalkCount>>(score);
    std::string out;
    for (std::size_t k = 0; k < tuple.size(); ++k) {
        if (k > 0) out += ',';
        out += tuple[k].str();
    }
    return out;
}

} // namespace

void write_trace_text(std::ostream& out, const RemovalTrace& trace) {
    for (const auto& rec : trace.removed) {
        out << rec.iteration << ' ' << rec.edge.u << ' ' << rec.edge.v << ' '
            << score_summary(rec.score) << '\n';
    }
}

std::string trace_text(const RemovalTrace& trace) {
    std::ostringstream out;
    write_trace_text(out, trace);
    return out.str();
}

nlohmann::json trace_to_json(const RemovalTrace& trace) {
    nlohmann::json params;
    params["requested"] = trace.requested;
    if (trace.algorithm == "wis" || trace.algorithm == "gwis") {
        params["depth"] = trace.depth;
        params["batch_size"] = trace.batch_size;
        params["tie_break"] = tie_break_name(trace.tie_break);
    } else if (trace.algorithm == "1-wis") {
        params["tie_break"] = tie_break_name(trace.tie_break);
    } else if (trace.algorithm == "random") {
        params["seed"] = trace.seed;
    }

    nlohmann::json removed = nlohmann::json::array();
    for (const auto& rec : trace.removed) {
        nlohmann::json entry;
        entry["iteration"] = rec.iteration;
        entry["edge"] = {rec.edge.u, rec.edge.v};
        if (const auto* tuple = std::get_if<std::vector<WalkCount>>(&rec.score)) {
            nlohmann::json values = nlohmann::json::array();
            for (const auto& v : *tuple) values.push_back(v.str());
            entry["sorted_score"] = std::move(values);
        } else if (const auto* pair = std::get_if<DegreePair>(&rec.score)) {
            entry["degree_score"] = {pair->deg_min, pair->deg_max};
        }
        removed.push_back(std::move(entry));
    }

    nlohmann::json final_edges = nlohmann::json::array();
    for (const Edge& e : trace.final_graph.edges()) final_edges.push_back({e.u, e.v});

    return nlohmann::json{{"algorithm", trace.algorithm},
                          {"params", std::move(params)},
                          {"num_vertices", trace.final_graph.vertex_count()},
                          {"exhausted", trace.exhausted},
                          {"removed", std::move(removed)},
                          {"final_edges", std::move(final_edges)}};
}

namespace {

nlohmann::json vertex_set_json(const VertexSet& s) {
    nlohmann::json out = nlohmann::json::array();
    for (Vertex v : s.values()) out.push_back(v);
    return out;
}

} // namespace

nlohmann::json bound_report_to_json(const BoundReport& report, std::uint64_t fingerprint,
                                    const VertexSet& subset) {
    return nlohmann::json{
        {"graph_fingerprint", fingerprint},
        {"subset", vertex_set_json(subset)},
        {"depth", report.depth},
        {"input_dim", report.input_dim},
        {"hidden_dim", report.hidden_dim},
        {"mode", report.mode.is_vertex() ? "vertex" : "graph"},
        {"target", report.mode.is_vertex() ? nlohmann::json(report.mode.target)
                                           : nlohmann::json(nullptr)},
        {"directed", report.directed},
        {"boundary_walks", report.boundary_walks.str()},
        {"upper_exponent", report.upper_exponent.str()},
        {"upper_log", report.upper_log},
        {"lower_log", report.lower_log},
        {"maximizing_subset", vertex_set_json(report.maximizer)},
        {"maximizing_walks", report.maximizer_walks.str()}};
}

nlohmann::json witness_to_json(const LowerBoundWitness& witness) {
    nlohmann::json templates = nlohmann::json::array();
    for (const auto& vec : witness.templates.vectors) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& x : vec) row.push_back(x.str());
        templates.push_back(std::move(row));
    }
    return nlohmann::json{{"subset", vertex_set_json(witness.subset)},
                          {"inside_realizer", vertex_set_json(witness.inside)},
                          {"outside_realizer", vertex_set_json(witness.outside)},
                          {"walks", witness.walks.str()},
                          {"gamma", witness.gamma.str()},
                          {"expected_rank", witness.expected_rank.str()},
                          {"achieved_rank", witness.achieved_rank},
                          {"templates", std::move(templates)}};
}

const char* tie_break_name(TieBreak tie_break) {
    return tie_break == TieBreak::SmallestEdge ? "smallest-edge" : "largest-edge";
}

const char* argmax_order_name(ArgmaxOrder order) {
    switch (order) {
        case ArgmaxOrder::SortedLexicographic: return "sorted-lexicographic";
        case ArgmaxOrder::Sum: return "sum";
        case ArgmaxOrder::Min: return "min";
        case ArgmaxOrder::Max: return "max";
    }
    return "sorted-lexicographic";
}

} // namespace walkwise
