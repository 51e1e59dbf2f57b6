#pragma once

#include "walkwise/types.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace walkwise {

/// Dense row-major matrix over an exact scalar.
template <class S>
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    S& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const S& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend bool operator==(const Mat&, const Mat&) = default;

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
        return m;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<S> data_;
};

using RationalMatrix = Mat<Rational>;

/// Exact rank by fraction-preserving Gaussian elimination; no tolerances.
/// Columns are processed left to right with the first nonzero row as pivot.
std::size_t rank_exact(RationalMatrix m);

} // namespace walkwise
