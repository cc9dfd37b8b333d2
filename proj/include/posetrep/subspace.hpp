#pragma once

// Subspaces of k^n carried as matrices whose columns span them.

#include "posetrep/matrix.hpp"

namespace posetrep::subspace {

template <ExactField Field>
Matrix<Field> zero(const Field& f, std::size_t n) {
    return Matrix<Field>(f, n, 0);
}

template <ExactField Field>
Matrix<Field> whole(const Field& f, std::size_t n) {
    return Matrix<Field>::identity(f, n);
}

template <ExactField Field>
std::size_t dimension(const Matrix<Field>& span) {
    return rank(span);
}

template <ExactField Field>
Matrix<Field> sum(const Matrix<Field>& a, const Matrix<Field>& b) {
    return canonical_column_basis(hstack(a, b));
}

/// Basis of span(a) ∩ span(b).
template <ExactField Field>
Matrix<Field> intersection(const Matrix<Field>& a, const Matrix<Field>& b) {
    Matrix<Field> ba = canonical_column_basis(a);
    Matrix<Field> bb = canonical_column_basis(b);
    // x in ker [A | -B]  ->  A x_a lies in both spans.
    auto kernel = nullspace_matrix(hstack(ba, -bb));
    Matrix<Field> coeffs = kernel.row_range(0, ba.cols());
    return canonical_column_basis(ba * coeffs);
}

template <ExactField Field>
bool contains(const Matrix<Field>& big, const Matrix<Field>& small) {
    return rank(hstack(big, small)) == rank(big);
}

template <ExactField Field>
bool equal(const Matrix<Field>& a, const Matrix<Field>& b) {
    return canonical_column_basis(a) == canonical_column_basis(b);
}

/// Rows spanning the annihilator: K * span = 0 and rank K = n - dim span.
template <ExactField Field>
Matrix<Field> annihilator(const Matrix<Field>& span) {
    auto rows = nullspace_basis(span.transpose());
    return Matrix<Field>::from_columns(span.field(), span.rows(), rows).transpose();
}

/// Coordinates of the columns of `vectors` with respect to the independent
/// columns of `basis`; every column must lie in span(basis).
template <ExactField Field>
Matrix<Field> coordinates(const Matrix<Field>& basis, const Matrix<Field>& vectors) {
    Matrix<Field> out(basis.field(), basis.cols(), vectors.cols());
    for (std::size_t j = 0; j < vectors.cols(); ++j) {
        auto x = solve(basis, vectors.column(j));
        if (!x) throw Error(ErrorCode::InvalidInput, "vector outside the given span");
        for (std::size_t i = 0; i < basis.cols(); ++i) out(i, j) = (*x)[i];
    }
    return out;
}

/// Image of span under the linear map, as a canonical basis.
template <ExactField Field>
Matrix<Field> image(const Matrix<Field>& map, const Matrix<Field>& span) {
    return canonical_column_basis(map * span);
}

}  // namespace posetrep::subspace
