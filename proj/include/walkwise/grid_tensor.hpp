#pragma once

#include "walkwise/gnn.hpp"
#include "walkwise/graph.hpp"
#include "walkwise/matrix.hpp"
#include "walkwise/types.hpp"
#include "walkwise/vertex_set.hpp"

#include <cstdint>
#include <vector>

namespace walkwise {

inline constexpr std::size_t kDefaultGridBudget = 1'000'000;

/// The grid tensor of a network's output function, arranged as a matrix:
/// rows are indexed by template assignments to the vertices of `row_vertices`
/// and columns by assignments to the complement. Assignments pack into
/// indices mixed-radix over ascending vertex order, first vertex most
/// significant.
struct GridMatricization {
    std::size_t template_count = 0;
    VertexSet row_vertices;
    VertexSet col_vertices;
    RationalMatrix matrix;

    std::size_t pack(std::span<const std::size_t> digits) const {
        std::size_t index = 0;
        for (std::size_t d : digits) index = index * template_count + d;
        return index;
    }
    std::vector<std::size_t> row_assignment(std::size_t row) const {
        return unpack(row, row_vertices.size());
    }
    std::vector<std::size_t> col_assignment(std::size_t col) const {
        return unpack(col, col_vertices.size());
    }

private:
    std::vector<std::size_t> unpack(std::size_t index, std::size_t positions) const {
        std::vector<std::size_t> digits(positions);
        for (std::size_t k = positions; k-- > 0;) {
            digits[k] = index % template_count;
            index /= template_count;
        }
        return digits;
    }
};

/// Evaluates the network over every assignment of template vectors to
/// vertices and matricizes the resulting grid tensor with respect to
/// `subset`. Refuses when template_count^|V| exceeds the evaluation budget.
GridMatricization grid_matricization(const RationalGnn& net, const Graph& g,
                                     const TemplateSet& templates, const VertexSet& subset,
                                     PredictionMode mode,
                                     std::size_t budget = kDefaultGridBudget,
                                     unsigned threads = 0);

} // namespace walkwise
