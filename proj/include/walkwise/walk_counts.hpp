#pragma once

#include "walkwise/graph.hpp"
#include "walkwise/types.hpp"
#include "walkwise/vertex_set.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace walkwise {

// Representation used for the adjacency-matrix power behind count_walks.
// Auto picks Dense up to dense_power_threshold() vertices and Sparse above;
// both are exact and must agree entry for entry.
enum class PowerRepr { Auto, Dense, Sparse };

constexpr std::size_t dense_power_threshold() { return 4096; }

/// Dense square matrix of exact integers.
struct DenseIntMatrix {
    std::size_t n = 0;
    std::vector<WalkCount> a; // row-major

    explicit DenseIntMatrix(std::size_t size = 0) : n(size), a(size * size) {}
    WalkCount& at(std::size_t r, std::size_t c) { return a[r * n + c]; }
    const WalkCount& at(std::size_t r, std::size_t c) const { return a[r * n + c]; }
};

/// Sparse square matrix of exact integers; each row holds (column, value)
/// pairs sorted by column.
struct SparseIntMatrix {
    std::size_t n = 0;
    std::vector<std::vector<std::pair<Vertex, WalkCount>>> rows;

    explicit SparseIntMatrix(std::size_t size = 0) : n(size), rows(size) {}
};

DenseIntMatrix adjacency_dense(const Graph& g);
SparseIntMatrix adjacency_sparse(const Graph& g);

// A^power by repeated squaring. power 0 yields the identity.
DenseIntMatrix dense_power(const DenseIntMatrix& base, std::uint32_t power);
SparseIntMatrix sparse_power(const SparseIntMatrix& base, std::uint32_t power);

/// Number of walks of the given length from any vertex of I to any vertex of
/// J, i.e. the I x J entry sum of the length-th adjacency power (self-loops
/// included). Exact for every length.
WalkCount count_walks(const Graph& g, std::uint32_t length, const VertexSet& from,
                      const VertexSet& to, PowerRepr repr = PowerRepr::Auto);

namespace detail {

// Entry sum of the power restricted to from x to; shared by count_walks and
// the scoring loop (which caches powers across queries).
WalkCount sum_dense(const DenseIntMatrix& m, std::span<const Vertex> from,
                    std::span<const Vertex> to, bool to_is_all);
WalkCount sum_sparse(const SparseIntMatrix& m, std::span<const Vertex> from,
                     std::span<const Vertex> to, bool to_is_all);

// Length-1 count straight off the adjacency structure (the power-1 matrix is
// the adjacency matrix itself, so no materialization is needed).
WalkCount length_one_sum(const Graph& g, std::span<const Vertex> from,
                         std::span<const Vertex> to, bool to_is_all);

} // namespace detail

} // namespace walkwise
