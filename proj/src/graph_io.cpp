#include "walkwise/graph_io.hpp"

#include "walkwise/errors.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace walkwise {

namespace {

std::uint64_t parse_field(const std::string& token, std::size_t line_no, const char* what) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError("line " + std::to_string(line_no) + ": bad " + what + " '" + token +
                         "'");
    }
    return value;
}

} // namespace

EdgeListData read_edge_list(std::istream& in, bool directed) {
    EdgeListData data;
    std::string line;
    std::size_t line_no = 0;
    bool any_typed = false;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;

        std::istringstream fields(line);
        std::string a, b, c, extra;
        fields >> a >> b;
        if (b.empty()) {
            throw ParseError("line " + std::to_string(line_no) +
                             ": expected two vertex ids, got '" + line + "'");
        }
        const std::uint64_t u = parse_field(a, line_no, "vertex id");
        const std::uint64_t v = parse_field(b, line_no, "vertex id");
        if (u > UINT32_MAX || v > UINT32_MAX) {
            throw ParseError("line " + std::to_string(line_no) + ": vertex id too large");
        }

        EdgeTypeId type = 0;
        bool typed = false;
        if (fields >> c) {
            if (!directed) {
                throw ParseError("line " + std::to_string(line_no) +
                                 ": edge type field is only valid for directed graphs");
            }
            type = static_cast<EdgeTypeId>(parse_field(c, line_no, "edge type"));
            typed = true;
            if (fields >> extra) {
                throw ParseError("line " + std::to_string(line_no) + ": trailing field '" +
                                 extra + "'");
            }
        }

        if (typed && !any_typed) {
            // All earlier edges get type 0.
            data.types.assign(data.edges.size(), 0);
            any_typed = true;
        }
        data.edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
        if (any_typed) data.types.push_back(type);
        data.max_vertex = std::max({data.max_vertex, static_cast<Vertex>(u),
                                    static_cast<Vertex>(v)});
    }
    return data;
}

Graph load_graph(const std::string& path, bool directed,
                 std::optional<std::size_t> num_vertices) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    EdgeListData data = read_edge_list(in, directed);
    const std::size_t inferred = data.edges.empty() ? 0 : std::size_t{data.max_vertex} + 1;
    const std::size_t n = num_vertices.value_or(inferred);
    return Graph::build(data.edges, n, directed, data.types);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    if (g.typed()) {
        for (const auto& [edge, type] : g.typed_edges()) {
            out << edge.u << ' ' << edge.v << ' ' << type << '\n';
        }
    } else {
        for (const Edge& edge : g.edges()) {
            out << edge.u << ' ' << edge.v << '\n';
        }
    }
}

void save_edge_list(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    write_edge_list(out, g);
}

} // namespace walkwise
