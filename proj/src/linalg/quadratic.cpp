#include "isingpair/linalg/quadratic.hpp"

#include <stdexcept>

namespace isingpair {

QuadraticRoots solve_quadratic(const Rational& a, const Rational& b, const Rational& c) {
  if (a.is_zero() && b.is_zero() && c.is_zero()) {
    throw std::invalid_argument("solve_quadratic: all coefficients are zero");
  }
  QuadraticRoots out;
  if (a.is_zero()) {
    if (!b.is_zero()) out.roots.push_back(-c / b);
    return out;
  }
  const Rational disc = b * b - Rational(4) * a * c;
  if (disc.sign() < 0) return out;
  bool exact = false;
  const Rational root = disc.sqrt_exact(exact);
  if (!exact) {
    out.irrational = true;
    return out;
  }
  const Rational two_a = Rational(2) * a;
  Rational r1 = (-b - root) / two_a;
  Rational r2 = (-b + root) / two_a;
  if (r2 < r1) std::swap(r1, r2);
  out.roots.push_back(r1);
  if (r2 != r1) out.roots.push_back(r2);
  return out;
}

}  // namespace isingpair
