#pragma once

#include <vector>

#include "isingpair/linalg/rational.hpp"

namespace isingpair {

struct QuadraticRoots {
  /// Distinct rational roots, ascending.
  std::vector<Rational> roots;
  /// Real roots exist but are not rational.
  bool irrational = false;
};

/// All rational roots of a t² + b t + c. Degenerates to the linear case when
/// a = 0. Throws std::invalid_argument when a = b = c = 0.
QuadraticRoots solve_quadratic(const Rational& a, const Rational& b, const Rational& c);

}  // namespace isingpair
