#pragma once

#include "twistlab/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace twistlab {

/// Dense row-major matrix over a ring T.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0)) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows)
    {
        const std::size_t c = rows.empty() ? 0 : rows.front().size();
        Matrix m(rows.size(), c);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != c) throw DomainError("ragged matrix rows");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static Matrix from_columns(const std::vector<std::vector<T>>& cols, std::size_t rows)
    {
        Matrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw DomainError("column length mismatch");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> column(std::size_t j) const
    {
        std::vector<T> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }
    std::vector<T> row(std::size_t i) const
    {
        return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                              data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_) throw std::logic_error("matrix product dimension mismatch");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& x = a(i, k);
                if (x == T(0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!(b(k, j) == T(0))) r(i, j) += x * b(k, j);
            }
        return r;
    }

    std::vector<T> apply(const std::vector<T>& v) const
    {
        if (v.size() != cols_) throw std::logic_error("matrix-vector dimension mismatch");
        std::vector<T> r(rows_, T(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!(v[j] == T(0)) && !((*this)(i, j) == T(0))) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    friend Matrix operator+(Matrix a, const Matrix& b)
    {
        for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
        return a;
    }
    friend Matrix operator-(Matrix a, const Matrix& b)
    {
        for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
        return a;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    bool is_zero() const
    {
        for (const auto& x : data_)
            if (!(x == T(0))) return false;
        return true;
    }

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
    {
        Matrix b(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
        return b;
    }

    /// Columns selected by index.
    Matrix select_columns(const std::vector<std::size_t>& idx) const
    {
        Matrix m(rows_, idx.size());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = (*this)(i, idx[j]);
        return m;
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b)
    {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/// Reduced row echelon form over a field.  Returns pivot column indices.
/// When `pivot_allowed` is given, only those columns may carry pivots.
template <typename T>
std::vector<std::size_t> rref_in_place(Matrix<T>& m, const std::vector<bool>* pivot_allowed = nullptr)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        if (pivot_allowed && !(*pivot_allowed)[c]) continue;
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == T(0)) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(p, r);
        const T inv = T(1) / m(r, c);
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!(m(r, j) == T(0))) m(r, j) = m(r, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == T(0)) continue;
            const T f = m(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (!(m(r, j) == T(0))) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <typename T>
std::size_t rank_of(Matrix<T> m)
{
    return rref_in_place(m).size();
}

/// Inverse over a field; nullopt if singular.
template <typename T>
std::optional<Matrix<T>> inverse(const Matrix<T>& a)
{
    const std::size_t n = a.rows();
    if (a.cols() != n) throw std::logic_error("inverse of non-square matrix");
    Matrix<T> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = T(1);
    }
    std::vector<bool> allowed(2 * n, false);
    for (std::size_t j = 0; j < n; ++j) allowed[j] = true;
    const auto piv = rref_in_place(aug, &allowed);
    if (piv.size() != n) return std::nullopt;
    return aug.block(0, n, n, n);
}

/// Basis (as columns) of the right null space {x : a x = 0} over a field.
template <typename T>
Matrix<T> null_space(const Matrix<T>& a)
{
    Matrix<T> m = a;
    const auto piv = rref_in_place(m);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : piv) is_pivot[p] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<T> v(a.cols(), T(0));
        v[f] = T(1);
        for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -m(k, f);
        basis.push_back(std::move(v));
    }
    return Matrix<T>::from_columns(basis, a.cols());
}

}  // namespace twistlab
