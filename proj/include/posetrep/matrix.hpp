#pragma once

// Dense exact matrices over a prime field or the rationals, with the
// elimination routines the rest of the library is built on.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "posetrep/errors.hpp"
#include "posetrep/field.hpp"

namespace posetrep {

template <ExactField Field>
using Vector = std::vector<typename Field::Element>;

template <ExactField Field>
class Matrix {
public:
    using Element = typename Field::Element;

    explicit Matrix(Field field, std::size_t rows = 0, std::size_t cols = 0)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

    static Matrix identity(const Field& field, std::size_t n) {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
        return m;
    }

    /// Row-major integer literal, reduced into the field.
    static Matrix from_rows(const Field& field, const std::vector<std::vector<std::int64_t>>& rows) {
        std::size_t c = rows.empty() ? 0 : rows.front().size();
        Matrix m(field, rows.size(), c);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != c) throw Error(ErrorCode::InvalidInput, "ragged matrix literal");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = field.from_int(rows[i][j]);
        }
        return m;
    }

    static Matrix from_columns(const Field& field, std::size_t rows, const std::vector<Vector<Field>>& columns) {
        Matrix m(field, rows, columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (columns[j].size() != rows) throw Error(ErrorCode::InvalidInput, "column length mismatch");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
        }
        return m;
    }

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Element& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Element& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector<Field> column(std::size_t j) const {
        Vector<Field> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    std::vector<Vector<Field>> columns() const {
        std::vector<Vector<Field>> out;
        out.reserve(cols_);
        for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
        return out;
    }

    Matrix transpose() const {
        Matrix t(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    /// Columns [first, first + count).
    Matrix column_range(std::size_t first, std::size_t count) const {
        Matrix out(field_, rows_, count);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < count; ++j) out(i, j) = (*this)(i, first + j);
        return out;
    }

    Matrix row_range(std::size_t first, std::size_t count) const {
        Matrix out(field_, count, cols_);
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(first + i, j);
        return out;
    }

    /// Copies `block` into this matrix with its top-left corner at (r, c).
    void place(std::size_t r, std::size_t c, const Matrix& block) {
        for (std::size_t i = 0; i < block.rows(); ++i)
            for (std::size_t j = 0; j < block.cols(); ++j) (*this)(r + i, c + j) = block(i, j);
    }

    bool is_zero() const {
        for (const auto& e : data_)
            if (!field_.is_zero(e)) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidInput, "matmul shape mismatch");
        const Field& f = a.field_;
        Matrix c(f, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Element& x = a(i, k);
                if (f.is_zero(x)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = f.add(c(i, j), f.mul(x, b(k, j)));
            }
        return c;
    }

    friend Vector<Field> operator*(const Matrix& a, const Vector<Field>& v) {
        if (a.cols_ != v.size()) throw Error(ErrorCode::InvalidInput, "matvec shape mismatch");
        const Field& f = a.field_;
        Vector<Field> out(a.rows_, f.zero());
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) out[i] = f.add(out[i], f.mul(a(i, k), v[k]));
        return out;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.check_same_shape(b);
        Matrix c = a;
        for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] = a.field_.add(a.data_[k], b.data_[k]);
        return c;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.check_same_shape(b);
        Matrix c = a;
        for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] = a.field_.sub(a.data_[k], b.data_[k]);
        return c;
    }

    friend Matrix operator-(const Matrix& a) {
        Matrix c = a;
        for (auto& e : c.data_) e = a.field_.neg(e);
        return c;
    }

    Matrix scaled(const Element& s) const {
        Matrix c = *this;
        for (auto& e : c.data_) e = field_.mul(s, e);
        return c;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            os << (i ? ", [" : "[");
            for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << field_.to_string((*this)(i, j));
            os << "]";
        }
        os << "]";
        return os.str();
    }

private:
    void check_same_shape(const Matrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_) throw Error(ErrorCode::InvalidInput, "shape mismatch");
    }

    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Element> data_;
};

/// [A | B], same row count.
template <ExactField Field>
Matrix<Field> hstack(const Matrix<Field>& a, const Matrix<Field>& b) {
    if (a.rows() != b.rows()) throw Error(ErrorCode::InvalidInput, "hstack row mismatch");
    Matrix<Field> out(a.field(), a.rows(), a.cols() + b.cols());
    out.place(0, 0, a);
    out.place(0, a.cols(), b);
    return out;
}

/// A stacked over B, same column count.
template <ExactField Field>
Matrix<Field> vstack(const Matrix<Field>& a, const Matrix<Field>& b) {
    if (a.cols() != b.cols()) throw Error(ErrorCode::InvalidInput, "vstack column mismatch");
    Matrix<Field> out(a.field(), a.rows() + b.rows(), a.cols());
    out.place(0, 0, a);
    out.place(a.rows(), 0, b);
    return out;
}

template <ExactField Field>
Matrix<Field> block_diagonal(const Matrix<Field>& a, const Matrix<Field>& b) {
    Matrix<Field> out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
    out.place(0, 0, a);
    out.place(a.rows(), a.cols(), b);
    return out;
}

template <ExactField Field>
struct RrefResult {
    Matrix<Field> reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

/// Reduced row echelon form; the pivot in each column is the first nonzero
/// entry at or below the current row.
template <ExactField Field>
RrefResult<Field> rref(Matrix<Field> m) {
    const Field& f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && f.is_zero(m(sel, col))) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
        auto inv = f.inv(m(row, col));
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = f.mul(inv, m(row, j));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || f.is_zero(m(i, col))) continue;
            auto factor = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    std::size_t r = pivots.size();
    return {std::move(m), std::move(pivots), r};
}

template <ExactField Field>
std::size_t rank(const Matrix<Field>& m) {
    return rref(m).rank;
}

/// Basis of {x : M x = 0}, one vector per free column.
template <ExactField Field>
std::vector<Vector<Field>> nullspace_basis(const Matrix<Field>& m) {
    const Field& f = m.field();
    auto [r, pivots, rk] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vector<Field>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector<Field> v(m.cols(), f.zero());
        v[free] = f.one();
        for (std::size_t i = 0; i < rk; ++i) v[pivots[i]] = f.neg(r(i, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Nullspace basis as the columns of a matrix.
template <ExactField Field>
Matrix<Field> nullspace_matrix(const Matrix<Field>& m) {
    return Matrix<Field>::from_columns(m.field(), m.cols(), nullspace_basis(m));
}

/// One solution of A x = b, if any.
template <ExactField Field>
std::optional<Vector<Field>> solve(const Matrix<Field>& a, const Vector<Field>& b) {
    const Field& f = a.field();
    if (b.size() != a.rows()) throw Error(ErrorCode::InvalidInput, "solve shape mismatch");
    Matrix<Field> aug(f, a.rows(), a.cols() + 1);
    aug.place(0, 0, a);
    for (std::size_t i = 0; i < a.rows(); ++i) aug(i, a.cols()) = b[i];
    auto [r, pivots, rk] = rref(aug);
    if (rk > 0 && pivots[rk - 1] == a.cols()) return std::nullopt;
    Vector<Field> x(a.cols(), f.zero());
    for (std::size_t i = 0; i < rk; ++i) x[pivots[i]] = r(i, a.cols());
    return x;
}

template <ExactField Field>
bool column_space_contains(const Matrix<Field>& m, const Vector<Field>& v) {
    return solve(m, v).has_value();
}

template <ExactField Field>
std::optional<Matrix<Field>> inverse(const Matrix<Field>& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const std::size_t n = m.rows();
    auto [r, pivots, rk] = rref(hstack(m, Matrix<Field>::identity(m.field(), n)));
    if (rk < n || (n > 0 && pivots[n - 1] >= n)) return std::nullopt;
    return r.column_range(n, n);
}

template <ExactField Field>
bool is_invertible(const Matrix<Field>& m) {
    return m.rows() == m.cols() && rank(m) == m.rows();
}

/// Columns C chosen greedily from the standard basis e_0, e_1, ... so that
/// [M | C] has full row rank and C has independent columns.
template <ExactField Field>
Matrix<Field> complete_to_full_rank(const Matrix<Field>& m) {
    const Field& f = m.field();
    const std::size_t n = m.rows();
    Matrix<Field> acc = m;
    std::size_t current = rank(acc);
    std::vector<Vector<Field>> chosen;
    for (std::size_t i = 0; i < n && current < n; ++i) {
        Vector<Field> e(n, f.zero());
        e[i] = f.one();
        Matrix<Field> trial = hstack(acc, Matrix<Field>::from_columns(f, n, {e}));
        std::size_t r = rank(trial);
        if (r > current) {
            acc = std::move(trial);
            current = r;
            chosen.push_back(std::move(e));
        }
    }
    return Matrix<Field>::from_columns(f, n, chosen);
}

/// Independent columns spanning the same space, in reduced (canonical) form:
/// equal spans give equal bases.
template <ExactField Field>
Matrix<Field> canonical_column_basis(const Matrix<Field>& m) {
    auto r = rref(m.transpose());
    return r.reduced.row_range(0, r.rank).transpose();
}

}  // namespace posetrep
