#include "walkwise/witness.hpp"

#include "walkwise/errors.hpp"
#include "walkwise/walk_counts.hpp"

#include <algorithm>
#include <string>

namespace walkwise {

RationalGnn witness_weights(std::uint32_t depth, std::uint32_t input_dim,
                            std::uint32_t hidden_dim, std::uint32_t edge_types) {
    if (depth < 2) throw ValidationError("witness weights require depth >= 2");
    if (edge_types == 0) throw ValidationError("at least one edge type is required");
    RationalGnn net;
    net.depth = depth;
    net.input_dim = input_dim;
    net.hidden_dim = hidden_dim;
    net.layers.resize(depth);

    // Every edge type shares the same matrix at each layer.
    Mat<Rational> first(hidden_dim, input_dim);
    for (std::uint32_t d = 0; d < std::min(input_dim, hidden_dim); ++d) first(d, d) = 1;
    net.layers[0].assign(edge_types, first);

    Mat<Rational> second(hidden_dim, hidden_dim);
    for (std::uint32_t d = 0; d < hidden_dim; ++d) second(0, d) = 1;
    net.layers[1].assign(edge_types, second);

    for (std::uint32_t l = 2; l < depth; ++l) {
        Mat<Rational> keep_first(hidden_dim, hidden_dim);
        keep_first(0, 0) = 1;
        net.layers[l].assign(edge_types, keep_first);
    }

    net.output = Mat<Rational>(1, hidden_dim);
    net.output(0, 0) = 1;
    return net;
}

RationalGnn depth_one_witness_weights(std::uint32_t input_dim, std::uint32_t hidden_dim) {
    RationalGnn net;
    net.depth = 1;
    net.input_dim = input_dim;
    net.hidden_dim = hidden_dim;
    Mat<Rational> first(hidden_dim, input_dim);
    for (std::uint32_t d = 0; d < std::min(input_dim, hidden_dim); ++d) first(d, d) = 1;
    net.layers = {{std::move(first)}};
    net.output = Mat<Rational>(1, hidden_dim);
    for (std::uint32_t d = 0; d < hidden_dim; ++d) net.output(0, d) = 1;
    return net;
}

TemplateSet depth_one_witness_templates(std::uint32_t input_dim, std::uint32_t hidden_dim) {
    const std::uint32_t d = std::min(input_dim, hidden_dim);
    TemplateSet templates;
    templates.vectors.resize(d, std::vector<Rational>(input_dim, Rational(0)));
    for (std::uint32_t m = 0; m < d; ++m) templates.vectors[m][m] = 1;
    return templates;
}

std::vector<std::vector<std::uint32_t>> multiset_configurations(std::uint32_t parts,
                                                                std::uint32_t total) {
    std::vector<std::vector<std::uint32_t>> configs;
    std::vector<std::uint32_t> current(parts, 0);
    // Lexicographic enumeration of all ways to place `total` into `parts`.
    auto recurse = [&](auto&& self, std::uint32_t position, std::uint32_t remaining) -> void {
        if (position + 1 == parts) {
            current[position] = remaining;
            configs.push_back(current);
            return;
        }
        for (std::uint32_t take = 0; take <= remaining; ++take) {
            current[position] = take;
            self(self, position + 1, remaining - take);
        }
    };
    if (parts > 0) recurse(recurse, 0, total);
    return configs;
}

std::vector<Rational> gamma_candidates() {
    // 2, 3, 1/2, 5, 1/3, 7, 1/5, ... : primes interleaved with their
    // reciprocals, then a tail of small non-integer ratios.
    static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
    std::vector<Rational> candidates;
    candidates.emplace_back(2);
    candidates.emplace_back(3);
    for (std::size_t k = 0; k + 2 < std::size(primes); ++k) {
        candidates.emplace_back(1, primes[k]);
        candidates.emplace_back(primes[k + 2]);
    }
    candidates.emplace_back(1, primes[std::size(primes) - 2]);
    candidates.emplace_back(1, primes[std::size(primes) - 1]);
    static const std::pair<int, int> ratios[] = {{3, 2}, {2, 3}, {5, 2}, {2, 5}, {5, 3},
                                                 {3, 5}, {7, 2}, {2, 7}, {7, 3}, {3, 7},
                                                 {7, 5}, {5, 7}, {4, 3}, {3, 4}, {5, 4}};
    for (auto [num, den] : ratios) candidates.emplace_back(num, den);
    return candidates;
}

namespace {

Rational rational_pow(const Rational& base, std::uint64_t exponent) {
    Rational result(1);
    Rational square = base;
    while (exponent > 0) {
        if (exponent & 1u) result *= square;
        exponent >>= 1u;
        if (exponent > 0) square *= square;
    }
    return result;
}

} // namespace

LowerBoundWitness lower_bound_witness(const Graph& g, const VertexSet& subset,
                                      std::uint32_t depth, std::uint32_t input_dim,
                                      std::uint32_t hidden_dim, PredictionMode mode,
                                      std::size_t budget, std::size_t max_vertices) {
    if (depth < 2) throw ValidationError("lower_bound_witness requires depth >= 2");
    if (mode.is_vertex() && mode.target >= g.vertex_count()) {
        throw ValidationError("target vertex out of range");
    }
    const std::uint32_t d = std::min(input_dim, hidden_dim);

    // Pick the admissible subset maximizing the lower bound, the same rule
    // bound_report applies.
    const VertexSet ends =
        mode.is_vertex() ? VertexSet{mode.target} : VertexSet::full(g.vertex_count());
    const DenseIntMatrix power = dense_power(adjacency_dense(g), depth - 1);
    const bool ends_all = !mode.is_vertex();

    bool have_choice = false;
    AdmissibleSubset choice;
    WalkCount choice_walks = 0;
    double best_value = 0.0;
    for (auto& entry : admissible_subsets_with_realizers(g, subset, max_vertices)) {
        const WalkCount walks =
            detail::sum_dense(power, entry.subset.values(), ends.values(), ends_all);
        if (walks.is_zero()) continue;
        const double rho = static_cast<double>(walks);
        const double value = rho * std::log((static_cast<double>(d) - 1.0) / rho + 1.0);
        if (!have_choice || value > best_value) {
            have_choice = true;
            best_value = value;
            choice = std::move(entry);
            choice_walks = walks;
        }
    }
    if (!have_choice) {
        throw ValidationError(
            "no admissible subset with a positive walk count; the lower bound is zero and "
            "has no witness");
    }

    if (choice_walks > budget) {
        throw BudgetError("witness walk count " + choice_walks.str() + " exceeds the budget of " +
                          std::to_string(budget));
    }
    const WalkCount size_exact = multiset_coefficient(d, choice_walks.convert_to<std::uint64_t>());
    if (size_exact > budget) {
        throw BudgetError("witness needs a " + size_exact.str() + "-row sub-matrix, over the " +
                          "budget of " + std::to_string(budget));
    }
    const std::size_t m = size_exact.convert_to<std::size_t>();
    const std::uint32_t rho = choice_walks.convert_to<std::uint32_t>();

    LowerBoundWitness witness;
    witness.subset = choice.subset;
    witness.inside = choice.inside;
    witness.outside = choice.outside;
    witness.walks = choice_walks;
    witness.expected_rank = size_exact;
    witness.weights = witness_weights(depth, input_dim, hidden_dim, g.edge_type_count());

    // gamma with det(A) != 0 for A[m][n] = gamma^<q_m, q_n>. Only finitely
    // many gamma are bad, so exhausting the candidate list means a bug.
    const auto configs = multiset_configurations(d, rho);
    if (configs.size() != m) {
        throw VerificationError("configuration count does not match the multiset coefficient");
    }
    bool found_gamma = false;
    for (const Rational& gamma : gamma_candidates()) {
        RationalMatrix a(m, m);
        for (std::size_t r = 0; r < m; ++r) {
            for (std::size_t c = 0; c < m; ++c) {
                std::uint64_t dot = 0;
                for (std::uint32_t k = 0; k < d; ++k) {
                    dot += static_cast<std::uint64_t>(configs[r][k]) * configs[c][k];
                }
                a(r, c) = rational_pow(gamma, dot);
            }
        }
        if (rank_exact(a) == m) {
            witness.gamma = gamma;
            found_gamma = true;
            break;
        }
    }
    if (!found_gamma) {
        throw VerificationError(
            "no gamma in the candidate list makes the configuration matrix invertible; "
            "this should be impossible for a correct candidate list");
    }

    // Templates: row m of Z, gamma^{q_d}, zero-padded to the input width,
    // plus the all-ones vector for the untouched vertices.
    witness.templates.vectors.assign(m + 1, std::vector<Rational>(input_dim, Rational(0)));
    for (std::size_t r = 0; r < m; ++r) {
        for (std::uint32_t k = 0; k < d; ++k) {
            witness.templates.vectors[r][k] = rational_pow(witness.gamma, configs[r][k]);
        }
    }
    witness.templates.vectors[m].assign(input_dim, Rational(1));

    // The designated sub-matrix of the grid matricization: entry (r, c)
    // evaluates the network with the inside realizer pinned to template r,
    // the outside realizer to template c, everything else all-ones.
    witness.designated = RationalMatrix(m, m);
    std::vector<const std::vector<Rational>*> features(g.vertex_count());
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < m; ++c) {
            for (Vertex v = 0; v < g.vertex_count(); ++v) {
                features[v] = &witness.templates.vectors[m];
            }
            for (Vertex v : witness.inside.values()) {
                features[v] = &witness.templates.vectors[r];
            }
            for (Vertex v : witness.outside.values()) {
                features[v] = &witness.templates.vectors[c];
            }
            witness.designated(r, c) = gnn_forward(
                witness.weights, g, std::span<const std::vector<Rational>* const>(features),
                mode);
        }
    }
    witness.achieved_rank = rank_exact(witness.designated);
    if (witness.achieved_rank != m) {
        throw VerificationError("witness sub-matrix has rank " +
                                std::to_string(witness.achieved_rank) + ", expected " +
                                std::to_string(m));
    }
    return witness;
}

} // namespace walkwise
