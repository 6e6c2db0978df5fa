#pragma once

// Exact rational linear algebra for the cone routines (dimensions <= 4).

#include <cstddef>
#include <optional>
#include <vector>

#include "lrlab/numeric.hpp"

namespace lrlab::lab::detail {

using Vector = std::vector<Rational>;
/// Row-major.
using Matrix = std::vector<Vector>;

int rank(Matrix m);

/// Inverse of a square matrix, or nothing when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Rows `rows` and columns `cols` of m.
Matrix submatrix(const Matrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols);

/// All k-element subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k);

Rational floor(const Rational& q);

}  // namespace lrlab::lab::detail
