#include "walkwise/grid_tensor.hpp"

#include "walkwise/errors.hpp"
#include "walkwise/parallel.hpp"

#include <string>

namespace walkwise {

GridMatricization grid_matricization(const RationalGnn& net, const Graph& g,
                                     const TemplateSet& templates, const VertexSet& subset,
                                     PredictionMode mode, std::size_t budget, unsigned threads) {
    net.validate();
    const std::size_t n = g.vertex_count();
    const std::size_t m = templates.count();
    if (m == 0) throw ValidationError("at least one template vector is required");
    if (templates.dim() != net.input_dim) {
        throw ValidationError("template dimension does not match network input width");
    }
    if (!subset.empty() && subset.max_value() >= n) {
        throw ValidationError("matricization subset contains vertex out of range");
    }

    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > budget / m) {
            throw BudgetError("grid evaluation needs " + std::to_string(m) + "^" +
                              std::to_string(n) + " forward passes, over the budget of " +
                              std::to_string(budget));
        }
        total *= m;
    }

    GridMatricization grid;
    grid.template_count = m;
    grid.row_vertices = subset;
    grid.col_vertices = subset.complement(n);

    std::size_t row_count = 1, col_count = 1;
    for (std::size_t k = 0; k < grid.row_vertices.size(); ++k) row_count *= m;
    for (std::size_t k = 0; k < grid.col_vertices.size(); ++k) col_count *= m;
    grid.matrix = RationalMatrix(row_count, col_count);

    const auto row_members = grid.row_vertices.values();
    const auto col_members = grid.col_vertices.values();

    parallel_chunks(total, threads, [&](std::size_t begin, std::size_t end) {
        std::vector<std::size_t> digits(n);
        std::vector<const std::vector<Rational>*> features(n);
        for (std::size_t packed = begin; packed < end; ++packed) {
            std::size_t rest = packed;
            for (std::size_t k = n; k-- > 0;) {
                digits[k] = rest % m;
                rest /= m;
            }
            for (std::size_t k = 0; k < n; ++k) features[k] = &templates.vectors[digits[k]];

            std::size_t row = 0, col = 0;
            for (Vertex v : row_members) row = row * m + digits[v];
            for (Vertex v : col_members) col = col * m + digits[v];
            grid.matrix(row, col) =
                gnn_forward(net, g, std::span<const std::vector<Rational>* const>(features), mode);
        }
    });
    return grid;
}

} // namespace walkwise
