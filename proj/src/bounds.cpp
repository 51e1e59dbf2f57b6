#include "walkwise/bounds.hpp"

#include "walkwise/errors.hpp"
#include "walkwise/walk_counts.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <string>

namespace walkwise {

WalkCount multiset_coefficient(std::uint64_t d, std::uint64_t p) {
    // binom(d + p - 1, p), computed as an exact running product.
    WalkCount result = 1;
    for (std::uint64_t k = 1; k <= p; ++k) {
        result *= d + k - 1;
        result /= k; // divides exactly: prefix of a binomial row
    }
    return result;
}

namespace {

using Mask = std::uint64_t;

std::vector<Vertex> mask_vertices(Mask mask, std::span<const Vertex> universe) {
    std::vector<Vertex> out;
    for (std::size_t k = 0; k < universe.size(); ++k) {
        if (mask & (Mask{1} << k)) out.push_back(universe[k]);
    }
    return out;
}

} // namespace

std::vector<AdmissibleSubset> admissible_subsets_with_realizers(const Graph& g,
                                                                const VertexSet& subset,
                                                                std::size_t max_vertices) {
    const std::size_t n = g.vertex_count();
    if (n > max_vertices || n > 63) {
        throw BudgetError("admissible subset enumeration limited to " +
                          std::to_string(std::min<std::size_t>(max_vertices, 63)) +
                          " vertices, graph has " + std::to_string(n));
    }
    if (!subset.empty() && subset.max_value() >= n) {
        throw ValidationError("subset contains vertex out of range");
    }

    // Bitmask neighborhoods including self-loops. Undirected graphs use N(.)
    // both ways; directed graphs pair out-neighborhoods (for the shared
    // neighbor set) with in-neighborhoods (for the no-repeat condition).
    std::vector<Mask> nbr_out(n), nbr_in(n);
    for (Vertex i = 0; i < n; ++i) {
        Mask out = Mask{1} << i;
        for (Vertex j : g.adjacent_out(i)) out |= Mask{1} << j;
        nbr_out[i] = out;
        if (g.directed()) {
            Mask in = Mask{1} << i;
            for (Vertex j : g.adjacent_in(i)) in |= Mask{1} << j;
            nbr_in[i] = in;
        } else {
            nbr_in[i] = out;
        }
    }

    const std::vector<Vertex> inside_universe(subset.values().begin(), subset.values().end());
    const VertexSet complement = subset.complement(n);
    const std::vector<Vertex> outside_universe(complement.values().begin(),
                                               complement.values().end());

    auto out_neighborhood = [&](const std::vector<Vertex>& members) {
        Mask acc = 0;
        for (Vertex v : members) acc |= nbr_out[v];
        return acc;
    };
    auto member_mask = [&](const std::vector<Vertex>& members) {
        Mask acc = 0;
        for (Vertex v : members) acc |= Mask{1} << v;
        return acc;
    };

    std::map<std::vector<Vertex>, std::pair<std::vector<Vertex>, std::vector<Vertex>>> found;
    const Mask inside_limit = Mask{1} << inside_universe.size();
    const Mask outside_limit = Mask{1} << outside_universe.size();
    for (Mask im = 0; im < inside_limit; ++im) {
        const std::vector<Vertex> inside = mask_vertices(im, inside_universe);
        const Mask inside_bits = member_mask(inside);
        const Mask inside_nbrs = out_neighborhood(inside);
        for (Mask om = 0; om < outside_limit; ++om) {
            const std::vector<Vertex> outside = mask_vertices(om, outside_universe);
            const Mask shared = inside_nbrs & out_neighborhood(outside);

            bool ok = true;
            const Mask outside_bits = member_mask(outside);
            for (Vertex k = 0; k < n && ok; ++k) {
                if (!(shared & (Mask{1} << k))) continue;
                ok = std::popcount(nbr_in[k] & inside_bits) == 1 &&
                     std::popcount(nbr_in[k] & outside_bits) == 1;
            }
            if (!ok) continue;

            std::vector<Vertex> members;
            for (Vertex k = 0; k < n; ++k) {
                if (shared & (Mask{1} << k)) members.push_back(k);
            }
            found.emplace(std::move(members), std::make_pair(inside, outside));
        }
    }

    std::vector<AdmissibleSubset> result;
    result.reserve(found.size());
    for (auto& [members, realizer] : found) {
        result.push_back({VertexSet(members), VertexSet(std::move(realizer.first)),
                          VertexSet(std::move(realizer.second))});
    }
    return result;
}

std::vector<VertexSet> admissible_subsets(const Graph& g, const VertexSet& subset,
                                          std::size_t max_vertices) {
    std::vector<VertexSet> result;
    for (auto& entry : admissible_subsets_with_realizers(g, subset, max_vertices)) {
        result.push_back(std::move(entry.subset));
    }
    return result;
}

BoundReport bound_report(const Graph& g, const VertexSet& subset, std::uint32_t depth,
                         std::uint32_t input_dim, std::uint32_t hidden_dim, PredictionMode mode,
                         std::size_t max_vertices) {
    if (depth == 0) throw ValidationError("network depth must be at least 1");
    if (input_dim == 0 || hidden_dim == 0) throw ValidationError("widths must be positive");
    if (mode.is_vertex() && mode.target >= g.vertex_count()) {
        throw ValidationError("target vertex out of range");
    }

    BoundReport report;
    report.depth = depth;
    report.input_dim = input_dim;
    report.hidden_dim = hidden_dim;
    report.mode = mode;
    report.directed = g.directed();

    const VertexSet ends =
        mode.is_vertex() ? VertexSet{mode.target} : VertexSet::full(g.vertex_count());
    const VertexSet boundary = g.boundary(subset);

    report.boundary_walks = count_walks(g, depth - 1, boundary, ends);
    if (g.directed()) {
        // Directed bounds keep the per-layer walk sum; the exponential-decay
        // collapse to 4*walks is specific to undirected graphs.
        WalkCount sum = 0;
        for (std::uint32_t l = 1; l <= depth; ++l) {
            sum += count_walks(g, depth - l, boundary, ends);
        }
        report.upper_exponent = sum + (mode.is_vertex() ? 0 : 1);
    } else {
        report.upper_exponent = 4 * report.boundary_walks + (mode.is_vertex() ? 0 : 1);
    }
    report.upper_log =
        static_cast<double>(report.upper_exponent) * std::log(static_cast<double>(hidden_dim));

    const double d = static_cast<double>(std::min(input_dim, hidden_dim));
    report.lower_log = 0.0;
    const DenseIntMatrix power = dense_power(adjacency_dense(g), depth - 1);
    const bool ends_all = !mode.is_vertex();
    for (auto& entry : admissible_subsets_with_realizers(g, subset, max_vertices)) {
        const WalkCount walks =
            detail::sum_dense(power, entry.subset.values(), ends.values(), ends_all);
        if (walks.is_zero()) continue; // zero by convention
        double value = 0.0;
        if (depth == 1) {
            // alpha = D^(1/walks) in graph mode and D in vertex mode; with
            // length-0 walk counts both collapse to log(D).
            value = std::log(d);
        } else {
            const double rho = static_cast<double>(walks);
            value = rho * std::log((d - 1.0) / rho + 1.0);
        }
        if (value > report.lower_log) {
            report.lower_log = value;
            report.maximizer = entry.subset;
            report.maximizer_walks = walks;
        }
    }
    return report;
}

} // namespace walkwise
