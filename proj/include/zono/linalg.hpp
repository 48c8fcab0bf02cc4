#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "zono/numeric.hpp"

namespace zono {

/// Row-major dense integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Integer> data_;
};

/// Bareiss fraction-free determinant of a square matrix.
Integer determinant(IntMatrix m);

/// Rank by fraction-free elimination.
int rank(IntMatrix m);

/// The unique x with A x = b (A given by rows), or nullopt when the system is
/// inconsistent or A lacks full column rank.
std::optional<std::vector<Rational>> solve_unique(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs);

}  // namespace zono
