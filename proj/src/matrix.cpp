#include "walkwise/matrix.hpp"

namespace walkwise {

std::size_t rank_exact(RationalMatrix m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m(pivot, col).is_zero()) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) {
            for (std::size_t c = col; c < cols; ++c) std::swap(m(pivot, c), m(rank, c));
        }
        const Rational& lead = m(rank, col);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m(r, col).is_zero()) continue;
            const Rational factor = m(r, col) / lead;
            m(r, col) = 0;
            for (std::size_t c = col + 1; c < cols; ++c) {
                if (!m(rank, c).is_zero()) m(r, c) -= factor * m(rank, c);
            }
        }
        ++rank;
    }
    return rank;
}

} // namespace walkwise
