#pragma once

// Dense exact linear algebra over the rationals. Matrices here are tiny
// (a few hundred entries at most) so everything is plain Gaussian
// elimination on a row-major buffer.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "splitt/errors.hpp"

namespace splitt {

using Rational = mpq_class;

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    /// Builds a matrix from nested initializer rows; all rows must agree in length.
    static Matrix from_rows(const std::vector<std::vector<Rational>>& rows) {
        if (rows.empty()) return {};
        Matrix m(rows.size(), rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw StructuralError("ragged matrix rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
    }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    /// Columns [first, first + count) as a new matrix.
    Matrix columns(std::size_t first, std::size_t count) const {
        Matrix m(rows_, count);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < count; ++j) m(i, j) = (*this)(i, first + j);
        return m;
    }

    /// Rows [first, first + count) as a new matrix.
    Matrix row_block(std::size_t first, std::size_t count) const {
        Matrix m(count, cols_);
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(first + i, j);
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw StructuralError("matrix product shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& aik = a(i, k);
                if (sgn(aik) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw StructuralError("matrix difference shape mismatch");
        Matrix c = a;
        for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
        return c;
    }

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
        os << '[';
        for (std::size_t i = 0; i < m.rows_; ++i) {
            if (i) os << "; ";
            for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? " " : "") << m(i, j);
        }
        return os << ']';
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Horizontal concatenation; both sides must have the same row count
/// (an empty-column side is allowed to have any row count).
inline Matrix hconcat(const Matrix& a, const Matrix& b) {
    if (a.cols() == 0) return b;
    if (b.cols() == 0) return a;
    if (a.rows() != b.rows()) throw StructuralError("hconcat row mismatch");
    Matrix m(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
    }
    return m;
}

struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form.
inline Echelon rref(Matrix m) {
    Echelon out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && sgn(m(p, col)) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
        const Rational inv = 1 / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || sgn(m(i, col)) == 0) continue;
            const Rational f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

inline std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

/// Columns form a basis of {x : m x = 0}. Shape: cols(m) x nullity.
inline Matrix kernel_basis(const Matrix& m) {
    const auto e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    Matrix k(m.cols(), free_cols.size());
    for (std::size_t f = 0; f < free_cols.size(); ++f) {
        k(free_cols[f], f) = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) k(e.pivots[r], f) = -e.reduced(r, free_cols[f]);
    }
    return k;
}

/// Rows form a basis of {y : y m = 0}. Shape: (rows(m) - rank) x rows(m).
inline Matrix left_kernel_basis(const Matrix& m) { return kernel_basis(m.transposed()).transposed(); }

/// Linearly independent columns of m spanning its column space.
inline Matrix column_space_basis(const Matrix& m) {
    const auto e = rref(m);
    Matrix b(m.rows(), e.pivots.size());
    for (std::size_t c = 0; c < e.pivots.size(); ++c)
        for (std::size_t i = 0; i < m.rows(); ++i) b(i, c) = m(i, e.pivots[c]);
    return b;
}

/// Standard basis vectors (as columns) completing the columns of `basis`
/// to a basis of the ambient space.
inline Matrix complement_basis(const Matrix& basis, std::size_t ambient_dim) {
    Matrix acc = basis.cols() == 0 ? Matrix(ambient_dim, 0) : basis;
    std::size_t r = basis.cols() == 0 ? 0 : rank(basis);
    std::vector<std::size_t> picked;
    for (std::size_t i = 0; i < ambient_dim && r < ambient_dim; ++i) {
        Matrix e(ambient_dim, 1);
        e(i, 0) = 1;
        Matrix trial = hconcat(acc, e);
        if (const auto tr = rank(trial); tr > r) {
            acc = std::move(trial);
            r = tr;
            picked.push_back(i);
        }
    }
    Matrix c(ambient_dim, picked.size());
    for (std::size_t j = 0; j < picked.size(); ++j) c(picked[j], j) = 1;
    return c;
}

/// Solves basis * x = target for x, where the columns of `basis` are
/// independent and every column of `target` lies in their span.
inline Matrix solve_in_span(const Matrix& basis, const Matrix& target) {
    const std::size_t k = basis.cols();
    if (k == 0) {
        if (!target.is_zero()) throw ConsistencyError("vector outside the zero subspace");
        return Matrix(0, target.cols());
    }
    const auto e = rref(hconcat(basis, target));
    for (auto p : e.pivots)
        if (p >= k) throw ConsistencyError("vector outside the given span");
    if (e.pivots.size() != k) throw ConsistencyError("basis columns are dependent");
    Matrix x(k, target.cols());
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t j = 0; j < target.cols(); ++j) x(r, j) = e.reduced(r, k + j);
    return x;
}

/// Rank of the span of the given vectors (all the same length).
inline std::size_t span_rank(const std::vector<std::vector<Rational>>& vectors, std::size_t length) {
    if (vectors.empty() || length == 0) return 0;
    Matrix m(vectors.size(), length);
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = 0; j < length; ++j) m(i, j) = vectors[i][j];
    return rank(m);
}

}  // namespace splitt
