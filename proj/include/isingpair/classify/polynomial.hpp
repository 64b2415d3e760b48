#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "isingpair/linalg/rational.hpp"

namespace isingpair {

/// Multivariate polynomial with Rational coefficients in a fixed number of
/// variables x_0, …, x_{k-1}. Zero coefficients are never stored.
class Polynomial {
 public:
  using Monomial = std::vector<int>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}
  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return nvars_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coeff(const Monomial& m) const;

  int degree() const;
  int degree_in(std::size_t var) const;
  /// Variables with a nonzero exponent somewhere, ascending.
  std::vector<std::size_t> variables() const;
  /// The coefficient of x_var^k, as a polynomial in the remaining variables.
  Polynomial coefficient(std::size_t var, int k) const;

  Polynomial substitute(std::size_t var, const Rational& value) const;
  Polynomial substitute(std::size_t var, const Polynomial& value) const;
  Rational evaluate(std::span<const Rational> values) const;

  /// Scaled to integer coefficients with content 1 and a positive leading
  /// coefficient (leading = greatest monomial in lexicographic order).
  Polynomial primitive() const;
  /// this = c · other for some nonzero Rational c.
  bool proportional(const Polynomial& other) const;

  Polynomial& add_term(const Monomial& m, const Rational& c);
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& a);
  Polynomial operator-() const { return Rational(-1) * *this; }
  Polynomial pow(int k) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string str(const std::vector<std::string>& names) const;

 private:
  std::size_t nvars_;
  std::map<Monomial, Rational> terms_;
};

}  // namespace isingpair
