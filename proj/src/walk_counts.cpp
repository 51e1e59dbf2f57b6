#include "walkwise/walk_counts.hpp"

#include "walkwise/errors.hpp"

#include <algorithm>

namespace walkwise {

DenseIntMatrix adjacency_dense(const Graph& g) {
    const std::size_t n = g.vertex_count();
    DenseIntMatrix m(n);
    for (Vertex i = 0; i < n; ++i) {
        m.at(i, i) = 1;
        for (Vertex j : g.adjacent_out(i)) m.at(i, j) = 1;
    }
    return m;
}

SparseIntMatrix adjacency_sparse(const Graph& g) {
    const std::size_t n = g.vertex_count();
    SparseIntMatrix m(n);
    for (Vertex i = 0; i < n; ++i) {
        auto& row = m.rows[i];
        auto adj = g.adjacent_out(i);
        row.reserve(adj.size() + 1);
        bool self_placed = false;
        for (Vertex j : adj) {
            if (!self_placed && i < j) {
                row.emplace_back(i, 1);
                self_placed = true;
            }
            row.emplace_back(j, 1);
        }
        if (!self_placed) row.emplace_back(i, 1);
    }
    return m;
}

namespace {

DenseIntMatrix dense_identity(std::size_t n) {
    DenseIntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

DenseIntMatrix dense_multiply(const DenseIntMatrix& a, const DenseIntMatrix& b) {
    const std::size_t n = a.n;
    DenseIntMatrix c(n);
    // i-k-j loop order keeps the inner accesses contiguous and skips zero
    // pivots, which dominate for sparse adjacency powers.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const WalkCount& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            const WalkCount* brow = &b.a[k * n];
            WalkCount* crow = &c.a[i * n];
            for (std::size_t j = 0; j < n; ++j) {
                if (!brow[j].is_zero()) crow[j] += aik * brow[j];
            }
        }
    }
    return c;
}

SparseIntMatrix sparse_identity(std::size_t n) {
    SparseIntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.rows[i].emplace_back(static_cast<Vertex>(i), 1);
    return m;
}

SparseIntMatrix sparse_multiply(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    const std::size_t n = a.n;
    SparseIntMatrix c(n);
    std::vector<WalkCount> acc(n);
    std::vector<Vertex> touched;
    for (std::size_t i = 0; i < n; ++i) {
        touched.clear();
        for (const auto& [k, av] : a.rows[i]) {
            for (const auto& [j, bv] : b.rows[k]) {
                if (acc[j].is_zero()) touched.push_back(j);
                acc[j] += av * bv;
            }
        }
        std::sort(touched.begin(), touched.end());
        auto& row = c.rows[i];
        row.reserve(touched.size());
        for (Vertex j : touched) {
            row.emplace_back(j, std::move(acc[j]));
            acc[j] = 0;
        }
    }
    return c;
}

} // namespace

DenseIntMatrix dense_power(const DenseIntMatrix& base, std::uint32_t power) {
    if (power == 0) return dense_identity(base.n);
    DenseIntMatrix result = base;
    std::uint32_t remaining = power - 1;
    DenseIntMatrix square = base;
    while (remaining > 0) {
        if (remaining & 1u) result = dense_multiply(result, square);
        remaining >>= 1u;
        if (remaining > 0) square = dense_multiply(square, square);
    }
    return result;
}

SparseIntMatrix sparse_power(const SparseIntMatrix& base, std::uint32_t power) {
    if (power == 0) return sparse_identity(base.n);
    SparseIntMatrix result = base;
    std::uint32_t remaining = power - 1;
    SparseIntMatrix square = base;
    while (remaining > 0) {
        if (remaining & 1u) result = sparse_multiply(result, square);
        remaining >>= 1u;
        if (remaining > 0) square = sparse_multiply(square, square);
    }
    return result;
}

namespace detail {

WalkCount sum_dense(const DenseIntMatrix& m, std::span<const Vertex> from,
                    std::span<const Vertex> to, bool to_is_all) {
    WalkCount total = 0;
    for (Vertex i : from) {
        const WalkCount* row = &m.a[static_cast<std::size_t>(i) * m.n];
        if (to_is_all) {
            for (std::size_t j = 0; j < m.n; ++j) total += row[j];
        } else {
            for (Vertex j : to) total += row[j];
        }
    }
    return total;
}

WalkCount sum_sparse(const SparseIntMatrix& m, std::span<const Vertex> from,
                     std::span<const Vertex> to, bool to_is_all) {
    WalkCount total = 0;
    for (Vertex i : from) {
        const auto& row = m.rows[i];
        if (to_is_all) {
            for (const auto& [j, v] : row) total += v;
        } else {
            std::size_t a = 0, b = 0;
            while (a < row.size() && b < to.size()) {
                if (row[a].first < to[b]) {
                    ++a;
                } else if (to[b] < row[a].first) {
                    ++b;
                } else {
                    total += row[a].second;
                    ++a;
                    ++b;
                }
            }
        }
    }
    return total;
}

WalkCount length_one_sum(const Graph& g, std::span<const Vertex> from,
                         std::span<const Vertex> to, bool to_is_all) {
    std::size_t total = 0;
    for (Vertex i : from) {
        auto adj = g.adjacent_out(i);
        if (to_is_all) {
            total += adj.size() + 1;
        } else {
            total += sorted_intersection_size(adj, to);
            if (std::binary_search(to.begin(), to.end(), i)) ++total;
        }
    }
    return WalkCount(total);
}

} // namespace detail

WalkCount count_walks(const Graph& g, std::uint32_t length, const VertexSet& from,
                      const VertexSet& to, PowerRepr repr) {
    const std::size_t n = g.vertex_count();
    if (!from.empty() && from.max_value() >= n) throw ValidationError("walk origin out of range");
    if (!to.empty() && to.max_value() >= n) throw ValidationError("walk target out of range");

    if (length == 0) {
        return WalkCount(sorted_intersection_size(from.values(), to.values()));
    }
    const bool to_is_all = to.size() == n;
    if (length == 1 && repr == PowerRepr::Auto) {
        return detail::length_one_sum(g, from.values(), to.values(), to_is_all);
    }
    const bool dense = repr == PowerRepr::Dense ||
                       (repr == PowerRepr::Auto && n <= dense_power_threshold());
    if (dense) {
        DenseIntMatrix m = dense_power(adjacency_dense(g), length);
        return detail::sum_dense(m, from.values(), to.values(), to_is_all);
    }
    SparseIntMatrix m = sparse_power(adjacency_sparse(g), length);
    return detail::sum_sparse(m, from.values(), to.values(), to_is_all);
}

} // namespace walkwise
