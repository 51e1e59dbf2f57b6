#pragma once

#include "walkwise/errors.hpp"
#include "walkwise/graph.hpp"
#include "walkwise/matrix.hpp"
#include "walkwise/types.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace walkwise {

/// Message-passing network with element-wise product aggregation. Layer 1
/// maps input_dim -> hidden_dim, layers 2..depth map hidden_dim ->
/// hidden_dim, and a final 1 x hidden_dim row produces the scalar output.
/// Directed graphs with multiple edge types carry one weight matrix per type
/// and layer; implicit self-loops use type 0.
template <class S>
struct GnnWeights {
    std::uint32_t depth = 1;
    std::uint32_t input_dim = 1;
    std::uint32_t hidden_dim = 1;
    // layers[l][q]: weight of layer l+1 for edge type q.
    std::vector<std::vector<Mat<S>>> layers;
    Mat<S> output; // 1 x hidden_dim

    std::uint32_t edge_type_count() const {
        return layers.empty() ? 0 : static_cast<std::uint32_t>(layers.front().size());
    }

    void validate() const {
        if (depth == 0) throw ValidationError("network depth must be at least 1");
        if (layers.size() != depth) throw ValidationError("layer count does not match depth");
        const std::size_t types = layers.front().size();
        if (types == 0) throw ValidationError("at least one edge type weight set is required");
        for (std::uint32_t l = 0; l < depth; ++l) {
            if (layers[l].size() != types) {
                throw ValidationError("inconsistent edge type count across layers");
            }
            const std::size_t in = l == 0 ? input_dim : hidden_dim;
            for (const auto& w : layers[l]) {
                if (w.rows() != hidden_dim || w.cols() != in) {
                    throw ValidationError("weight matrix shape mismatch at layer " +
                                          std::to_string(l + 1));
                }
            }
        }
        if (output.rows() != 1 || output.cols() != hidden_dim) {
            throw ValidationError("output weight must be 1 x hidden_dim");
        }
    }
};

using RationalGnn = GnnWeights<Rational>;

/// Fixed set of feature vectors a grid tensor is evaluated over.
struct TemplateSet {
    std::vector<std::vector<Rational>> vectors;

    std::size_t count() const { return vectors.size(); }
    std::size_t dim() const { return vectors.empty() ? 0 : vectors.front().size(); }
};

namespace detail {

template <class S>
bool scalar_is_zero(const S& x) {
    return x.is_zero();
}
inline bool scalar_is_zero(double x) { return x == 0.0; }

template <class S>
void multiply_into(const Mat<S>& w, const std::vector<S>& x, std::vector<S>& out) {
    out.assign(w.rows(), S(0));
    for (std::size_t r = 0; r < w.rows(); ++r) {
        S acc(0);
        for (std::size_t c = 0; c < w.cols(); ++c) {
            if (!scalar_is_zero(x[c])) acc += w(r, c) * x[c];
        }
        out[r] = std::move(acc);
    }
}

} // namespace detail

/// Output of the network on the given per-vertex features. Hidden embeddings
/// are combined over (in-)neighborhoods, self-loop included, by Hadamard
/// product; graph mode multiplies all final embeddings together before the
/// output row, vertex mode applies the output row to the target's embedding.
template <class S>
S gnn_forward(const GnnWeights<S>& net, const Graph& g,
              std::span<const std::vector<S>* const> features, PredictionMode mode) {
    const std::size_t n = g.vertex_count();
    if (features.size() != n) throw ValidationError("feature count does not match vertex count");
    for (const auto* x : features) {
        if (x->size() != net.input_dim) throw ValidationError("feature dimension mismatch");
    }
    if (g.directed()) {
        if (g.edge_type_count() > net.edge_type_count()) {
            throw ValidationError("network lacks weights for some edge types");
        }
    } else if (net.edge_type_count() != 1) {
        throw ValidationError("undirected graphs require a single edge type weight set");
    }
    if (mode.is_vertex() && mode.target >= n) {
        throw ValidationError("prediction target out of range");
    }

    std::vector<std::vector<S>> current(n), next(n);
    std::vector<S> message;
    for (std::uint32_t layer = 0; layer < net.depth; ++layer) {
        for (Vertex i = 0; i < n; ++i) {
            auto incoming = g.adjacent_in(i);
            auto types = g.typed() ? g.adjacent_in_types(i) : std::span<const EdgeTypeId>{};
            auto input_of = [&](Vertex j) -> const std::vector<S>& {
                return layer == 0 ? *features[j] : current[j];
            };

            // Self-loop message first (type 0), then the stored neighbors.
            std::vector<S>& h = next[i];
            detail::multiply_into(net.layers[layer][0], input_of(i), h);
            for (std::size_t k = 0; k < incoming.size(); ++k) {
                const EdgeTypeId q = types.empty() ? 0 : types[k];
                detail::multiply_into(net.layers[layer][q], input_of(incoming[k]), message);
                for (std::size_t d = 0; d < h.size(); ++d) h[d] *= message[d];
            }
        }
        std::swap(current, next);
    }

    std::vector<S> pooled;
    if (mode.is_vertex()) {
        pooled = std::move(current[mode.target]);
    } else {
        pooled = std::move(current[0]);
        for (Vertex i = 1; i < n; ++i) {
            for (std::size_t d = 0; d < pooled.size(); ++d) pooled[d] *= current[i][d];
        }
    }
    S out(0);
    for (std::size_t d = 0; d < pooled.size(); ++d) {
        if (!detail::scalar_is_zero(pooled[d])) out += net.output(0, d) * pooled[d];
    }
    return out;
}

/// Convenience overload over owned feature vectors.
template <class S>
S gnn_forward(const GnnWeights<S>& net, const Graph& g,
              const std::vector<std::vector<S>>& features, PredictionMode mode) {
    std::vector<const std::vector<S>*> ptrs(features.size());
    for (std::size_t i = 0; i < features.size(); ++i) ptrs[i] = &features[i];
    return gnn_forward(net, g, std::span<const std::vector<S>* const>(ptrs), mode);
}

} // namespace walkwise
