// Dense matrices over Scalar: rank, greedy pivot selection, inverse.
#pragma once

#include <vector>

#include "qgr/scalar.hpp"

namespace qgr {

using Matrix = std::vector<std::vector<Scalar>>;

Matrix zero_matrix(std::size_t rows, std::size_t cols);
Matrix identity_matrix(std::size_t n);
Matrix operator*(const Matrix& a, const Matrix& b);

/// Greedy independent columns: walks columns left to right and keeps each one
/// not in the span of those kept so far.
std::vector<int> independent_columns(const Matrix& m);
/// Same for rows.
std::vector<int> independent_rows(const Matrix& m);
int matrix_rank(const Matrix& m);

/// Inverse of a square matrix; throws ZeroDivisor when singular.
Matrix inverse(const Matrix& m);

}  // namespace qgr
