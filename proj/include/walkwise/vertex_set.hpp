#pragma once

#include "walkwise/types.hpp"

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <span>
#include <vector>

namespace walkwise {

// A set of vertex ids kept as a sorted, duplicate-free vector.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    }

    VertexSet(std::initializer_list<Vertex> members)
        : VertexSet(std::vector<Vertex>(members)) {}

    static VertexSet full(std::size_t num_vertices) {
        std::vector<Vertex> all(num_vertices);
        for (std::size_t i = 0; i < num_vertices; ++i) all[i] = static_cast<Vertex>(i);
        VertexSet s;
        s.members_ = std::move(all);
        return s;
    }

    bool contains(Vertex v) const {
        return std::binary_search(members_.begin(), members_.end(), v);
    }

    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    std::span<const Vertex> values() const { return members_; }
    Vertex max_value() const { return members_.back(); }

    VertexSet complement(std::size_t num_vertices) const {
        std::vector<Vertex> rest;
        rest.reserve(num_vertices - members_.size());
        std::size_t k = 0;
        for (std::size_t i = 0; i < num_vertices; ++i) {
            if (k < members_.size() && members_[k] == i) {
                ++k;
            } else {
                rest.push_back(static_cast<Vertex>(i));
            }
        }
        VertexSet s;
        s.members_ = std::move(rest);
        return s;
    }

    friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<Vertex> members_;
};

// Size of the intersection of two sorted ranges.
inline std::size_t sorted_intersection_size(std::span<const Vertex> a, std::span<const Vertex> b) {
    std::size_t count = 0, i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) {
            ++i;
        } else if (b[j] < a[i]) {
            ++j;
        } else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

} // namespace walkwise
