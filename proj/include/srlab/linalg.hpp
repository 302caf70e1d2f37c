#pragma once

// Exact dense linear algebra over an abstract field.
//
// All routines are free functions templated on the scalar type and work on
// Eigen dense matrices.  Pivots are chosen as the first nonzero entry in a
// column, never by magnitude, so the results are exact and reproducible.

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "srlab/errors.hpp"
#include "srlab/field.hpp"

namespace srlab {

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;
template <class S>
using RowVector = Eigen::Matrix<S, 1, Eigen::Dynamic>;

using Index = Eigen::Index;

template <class S>
struct RrefResult {
    Matrix<S> reduced;
    std::vector<Index> pivots;  // pivot column of row r is pivots[r]
};

/// Reduced row echelon form by Gauss-Jordan elimination.
template <class S>
RrefResult<S> rref(Matrix<S> m) {
    RrefResult<S> out;
    const Index rows = m.rows(), cols = m.cols();
    Index r = 0;
    for (Index c = 0; c < cols && r < rows; ++c) {
        Index p = r;
        while (p < rows && is_zero(m(p, c))) ++p;
        if (p == rows) continue;
        if (p != r) m.row(p).swap(m.row(r));
        const S inv = S(1) / m(r, c);
        for (Index j = c; j < cols; ++j) m(r, j) *= inv;
        for (Index i = 0; i < rows; ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            const S f = m(i, c);
            for (Index j = c; j < cols; ++j) {
                if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
            }
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.reduced = std::move(m);
    return out;
}

/// Row-echelon rank (forward elimination only).
template <class S>
Index rank(Matrix<S> m) {
    const Index rows = m.rows(), cols = m.cols();
    Index r = 0;
    for (Index c = 0; c < cols && r < rows; ++c) {
        Index p = r;
        while (p < rows && is_zero(m(p, c))) ++p;
        if (p == rows) continue;
        if (p != r) m.row(p).swap(m.row(r));
        const S inv = S(1) / m(r, c);
        for (Index i = r + 1; i < rows; ++i) {
            if (is_zero(m(i, c))) continue;
            const S f = m(i, c) * inv;
            for (Index j = c; j < cols; ++j) {
                if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
            }
        }
        ++r;
    }
    return r;
}

/// Columns form a basis of the right kernel {x : Mx = 0}.
template <class S>
Matrix<S> kernel_basis(const Matrix<S>& m) {
    const auto [red, pivots] = rref<S>(m);
    const Index cols = m.cols();
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (Index p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<Index> free_cols;
    for (Index c = 0; c < cols; ++c)
        if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);

    Matrix<S> basis(cols, static_cast<Index>(free_cols.size()));
    basis.setConstant(S(0));
    for (Index k = 0; k < static_cast<Index>(free_cols.size()); ++k) {
        const Index f = free_cols[static_cast<std::size_t>(k)];
        basis(f, k) = S(1);
        for (Index r = 0; r < static_cast<Index>(pivots.size()); ++r)
            basis(pivots[static_cast<std::size_t>(r)], k) = -red(r, f);
    }
    return basis;
}

/// Some solution of Mx = b, or nullopt if the system is inconsistent.
template <class S>
std::optional<Vector<S>> solve(const Matrix<S>& m, const Vector<S>& b) {
    if (b.rows() != m.rows()) throw Error(ErrorCode::ShapeMismatch, "solve: rhs length");
    Matrix<S> aug(m.rows(), m.cols() + 1);
    aug.leftCols(m.cols()) = m;
    aug.col(m.cols()) = b;
    const auto [red, pivots] = rref<S>(std::move(aug));
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    Vector<S> x(m.cols());
    x.setConstant(S(0));
    for (Index r = 0; r < static_cast<Index>(pivots.size()); ++r)
        x(pivots[static_cast<std::size_t>(r)]) = red(r, m.cols());
    return x;
}

template <class S>
S det(Matrix<S> m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::ShapeMismatch, "det of a non-square matrix");
    const Index n = m.rows();
    S result(1);
    for (Index c = 0; c < n; ++c) {
        Index p = c;
        while (p < n && is_zero(m(p, c))) ++p;
        if (p == n) return S(0);
        if (p != c) {
            m.row(p).swap(m.row(c));
            result = -result;
        }
        result *= m(c, c);
        const S inv = S(1) / m(c, c);
        for (Index i = c + 1; i < n; ++i) {
            if (is_zero(m(i, c))) continue;
            const S f = m(i, c) * inv;
            for (Index j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return result;
}

template <class Field, class Rng>
Vector<typename Field::Scalar> random_vector(const Field& field, Index len, Rng& rng) {
    Vector<typename Field::Scalar> v(len);
    for (Index i = 0; i < len; ++i) v(i) = field.random(rng);
    return v;
}

/// Filled row by row, so the draw order is part of the determinism contract.
template <class Field, class Rng>
Matrix<typename Field::Scalar> random_matrix(const Field& field, Index rows, Index cols, Rng& rng) {
    Matrix<typename Field::Scalar> m(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) m(i, j) = field.random(rng);
    return m;
}

template <class Field>
Matrix<typename Field::Scalar> zero_matrix(const Field& field, Index rows, Index cols) {
    Matrix<typename Field::Scalar> m(rows, cols);
    m.setConstant(field.zero());
    return m;
}

template <class Field>
Vector<typename Field::Scalar> zero_vector(const Field& field, Index len) {
    Vector<typename Field::Scalar> v(len);
    v.setConstant(field.zero());
    return v;
}

/// Incrementally maintained fully reduced row echelon basis of a row space.
///
/// Rows are kept normalized (pivot entry 1) and every pivot column is zero in
/// all other rows, so reducing a vector is independent of the pivot order.
template <class S>
class EchelonBasis {
public:
    explicit EchelonBasis(Index cols = 0) : cols_(cols), pivot_row_(static_cast<std::size_t>(cols), -1) {}

    Index cols() const { return cols_; }
    Index rank() const { return static_cast<Index>(rows_.size()); }
    bool full() const { return rank() == cols_; }

    /// Subtracts the span of the stored rows; the remainder vanishes on every pivot column.
    void reduce(RowVector<S>& v) const {
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const Index c = pivots_[k];
            if (is_zero(v(c))) continue;
            const S f = v(c);
            const RowVector<S>& row = rows_[k];
            for (Index j = 0; j < cols_; ++j) {
                if (!is_zero(row(j))) v(j) -= f * row(j);
            }
        }
    }

    /// Adds a row; returns true if it enlarged the span.
    bool insert(RowVector<S> v) {
        reduce(v);
        Index c = 0;
        while (c < cols_ && is_zero(v(c))) ++c;
        if (c == cols_) return false;
        const S inv = S(1) / v(c);
        for (Index j = c; j < cols_; ++j)
            if (!is_zero(v(j))) v(j) *= inv;
        for (auto& row : rows_) {
            if (is_zero(row(c))) continue;
            const S f = row(c);
            for (Index j = 0; j < cols_; ++j)
                if (!is_zero(v(j))) row(j) -= f * v(j);
        }
        pivot_row_[static_cast<std::size_t>(c)] = static_cast<Index>(rows_.size());
        rows_.push_back(std::move(v));
        pivots_.push_back(c);
        return true;
    }

    bool is_pivot(Index c) const { return pivot_row_[static_cast<std::size_t>(c)] >= 0; }

    /// Sorted non-pivot columns.
    std::vector<Index> free_columns() const {
        std::vector<Index> out;
        for (Index c = 0; c < cols_; ++c)
            if (!is_pivot(c)) out.push_back(c);
        return out;
    }

    /// Rows sorted by pivot column, i.e. the reduced row echelon form.
    Matrix<S> matrix() const {
        std::vector<std::size_t> order(rows_.size());
        for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
        Matrix<S> m(rank(), cols_);
        for (Index r = 0; r < rank(); ++r) m.row(r) = rows_[order[static_cast<std::size_t>(r)]];
        return m;
    }

private:
    Index cols_;
    std::vector<RowVector<S>> rows_;
    std::vector<Index> pivots_;
    std::vector<Index> pivot_row_;
};

}  // namespace srlab
