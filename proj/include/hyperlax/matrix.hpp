#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "hyperlax/error.hpp"
#include "hyperlax/rational.hpp"

namespace hyperlax {

/// Dense rational matrix, row-major.
class RatMatrix {
public:
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RatMatrix identity(std::size_t n) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
        const std::size_t cols = rows.empty() ? 0 : rows.front().size();
        RatMatrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw DimensionMismatch("ragged matrix rows");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<Rational> operator*(std::span<const Rational> v) const {
        if (v.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
        std::vector<Rational> r(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
        if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product size mismatch");
        RatMatrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
            }
        return r;
    }

    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> data_;
};

/// Gaussian elimination with exact pivots; det of a 0x0 matrix is 1.
inline Rational determinant(RatMatrix m) {
    if (!m.square()) throw DimensionMismatch("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m(pivot, col) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m(i, col) == 0) continue;
            const Rational f = m(i, col) / m(col, col);
            for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
        }
    }
    return det;
}

/// Gauss-Jordan inverse.
inline RatMatrix inverse(const RatMatrix& a) {
    if (!a.square()) throw DimensionMismatch("inverse of a non-square matrix");
    const std::size_t n = a.rows();
    RatMatrix m = a;
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m(pivot, col) == 0) ++pivot;
        if (pivot == n) throw SingularMatrix("matrix is singular");
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(pivot, j), m(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        }
        const Rational s = Rational(1) / m(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            m(col, j) *= s;
            inv(col, j) *= s;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || m(i, col) == 0) continue;
            const Rational f = m(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) -= f * m(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

}  // namespace hyperlax
