#pragma once

#include <optional>
#include <vector>

#include "wrnet/rational.hpp"

namespace wrnet::linalg {

using Matrix = std::vector<RatVec>;  // row-major

/// Reduced row echelon form in place; returns the pivot column of each nonzero row.
std::vector<std::size_t> rref(Matrix& rows, std::size_t cols);

std::size_t rank(Matrix rows, std::size_t cols);

/// Basis of span(rows), as the nonzero rows of the RREF.
Matrix row_space_basis(Matrix rows, std::size_t cols);

/// Basis of {x : rows * x = 0}.
Matrix kernel_basis(Matrix rows, std::size_t cols);

/// Coefficients c with sum_i c[i] * basis[i] = v, if v lies in the span.
/// `basis` must be linearly independent.
std::optional<RatVec> coordinates_in(const Matrix& basis, const RatVec& v);

/// span(a) == span(b) as subspaces of Q^cols.
bool same_span(const Matrix& a, const Matrix& b, std::size_t cols);

bool in_span(const Matrix& basis, const RatVec& v, std::size_t cols);

}  // namespace wrnet::linalg
