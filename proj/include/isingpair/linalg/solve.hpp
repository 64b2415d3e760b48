#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "isingpair/linalg/matrix.hpp"

namespace isingpair {

/// Reduced row echelon form; pivots are chosen as the first nonzero entry in
/// column order.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;
  std::vector<std::size_t> free_cols;
};

Echelon rref(const Matrix& a);

std::size_t rank(const Matrix& a);
Rational determinant(const Matrix& a);

/// Basis of {x : A x = 0}. One vector per free column, in ascending column
/// order; each has a 1 in its own free column and 0 in the other free columns.
std::vector<Vector> kernel(const Matrix& a);

/// Inverse of a nonsingular square matrix; std::nullopt when singular.
std::optional<Matrix> inverse(const Matrix& a);

struct LinearSolution {
  bool consistent = false;
  /// Particular solution with all free variables set to zero.
  Vector particular;
  /// Free columns in ascending order, one direction per column.
  std::vector<std::size_t> free_cols;
  std::vector<Vector> directions;
};

/// Solves A x = b exactly. Throws std::invalid_argument on a dimension
/// mismatch; an inconsistent system is reported, not thrown.
LinearSolution solve_linear(const Matrix& a, std::span<const Rational> b);

}  // namespace isingpair
