#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kemeny/rational.hpp"

namespace kemeny {

/// Dense row-major matrix over Rational or double.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {
        if (rows == 0 || cols == 0) throw std::invalid_argument("matrix dimensions must be >= 1");
    }

    static Matrix identity(std::size_t n) {
        Matrix id(n, n);
        for (std::size_t i = 0; i < n; ++i) id(i, i) = T(1);
        return id;
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
            }
        }
        return out;
    }

    friend Matrix operator-(Matrix a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference dimension mismatch");
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
        return a;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum dimension mismatch");
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
        return a;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

class SingularMatrix : public std::runtime_error {
public:
    SingularMatrix() : std::runtime_error("matrix is singular") {}
};

namespace detail {

// In-place Gauss-Jordan on [a | rhs]; a becomes I, rhs becomes a^{-1} rhs.
// Partial pivoting on the largest magnitude in the column.
template <typename T>
void gauss_jordan(Matrix<T>& a, Matrix<T>& rhs) {
    const std::size_t n = a.rows();
    const std::size_t k = rhs.cols();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        T best = magnitude(a(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            T cand = magnitude(a(r, col));
            if (best < cand) {
                best = std::move(cand);
                pivot = r;
            }
        }
        if (is_zero(best)) throw SingularMatrix();
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
            for (std::size_t c = 0; c < k; ++c) std::swap(rhs(pivot, c), rhs(col, c));
        }
        const T inv = T(1) / a(col, col);
        for (std::size_t c = col; c < n; ++c) a(col, c) *= inv;
        for (std::size_t c = 0; c < k; ++c) rhs(col, c) *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || is_zero(a(r, col))) continue;
            const T factor = a(r, col);
            for (std::size_t c = col; c < n; ++c) a(r, c) -= factor * a(col, c);
            for (std::size_t c = 0; c < k; ++c) rhs(r, c) -= factor * rhs(col, c);
        }
    }
}

}  // namespace detail

template <typename T>
Matrix<T> inverse(Matrix<T> a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse of a non-square matrix");
    Matrix<T> out = Matrix<T>::identity(a.rows());
    detail::gauss_jordan(a, out);
    return out;
}

/// Solves a x = b for every column of b.
template <typename T>
Matrix<T> solve(Matrix<T> a, Matrix<T> b) {
    if (a.rows() != a.cols() || b.rows() != a.rows()) throw std::invalid_argument("solve dimension mismatch");
    detail::gauss_jordan(a, b);
    return b;
}

}  // namespace kemeny
