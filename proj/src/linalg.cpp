#include "zono/linalg.hpp"

#include <utility>

#include "zono/error.hpp"

namespace zono {

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

}  // namespace

Integer determinant(IntMatrix m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw MathError("InvalidArgument", "determinant of a non-square matrix");
    if (n == 0) return 1;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            swap_rows(m, k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

int rank(IntMatrix m) {
    std::size_t r = 0;
    Integer prev = 1;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        swap_rows(m, r, p);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            for (std::size_t j = c + 1; j < m.cols(); ++j) m(i, j) = (m(i, j) * m(r, c) - m(i, c) * m(r, j)) / prev;
            m(i, c) = 0;
        }
        prev = m(r, c);
        ++r;
    }
    return static_cast<int>(r);
}

std::optional<std::vector<Rational>> solve_unique(std::vector<std::vector<Rational>> aug, std::vector<Rational> rhs) {
    const std::size_t rows = aug.size();
    const std::size_t cols = rows == 0 ? 0 : aug[0].size();
    if (rhs.size() != rows) throw MathError("DimensionMismatch", "right-hand side length differs from row count");
    for (std::size_t i = 0; i < rows; ++i) {
        if (aug[i].size() != cols) throw MathError("DimensionMismatch", "ragged coefficient matrix");
        aug[i].push_back(rhs[i]);
    }
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && aug[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(aug[r], aug[p]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || aug[i][c] == 0) continue;
            Rational f = aug[i][c] / aug[r][c];
            for (std::size_t j = c; j <= cols; ++j) aug[i][j] -= f * aug[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (aug[i][cols] != 0) return std::nullopt;
    if (r < cols) return std::nullopt;
    std::vector<Rational> x(cols);
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = aug[i][cols] / aug[i][pivot_col[i]];
    return x;
}

}  // namespace zono
