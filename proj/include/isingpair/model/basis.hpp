#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "isingpair/linalg/matrix.hpp"

namespace isingpair {

/// Canonical spanning set of B_{e,f}: the orbit axes, then α₁ = α(e,f) and
/// α₂ = α(e,e^{τ_f}) where they are not aliases of earlier labels.
///   n = 1: {a0}
///   n = 2: {a0, a1, alpha1}           (α₂ = (15/8)e)
///   n = 3: {a0, a1, a2, alpha1}       (α₂ = α₁)
///   n ≥ 4: {a0, …, a_{n-1}, alpha1, alpha2}
class SpanningBasis {
 public:
  explicit SpanningBasis(int n);

  int n() const { return n_; }
  std::size_t size() const { return names_.size(); }
  std::size_t axis(int j) const;  // j taken mod n
  std::optional<std::size_t> alpha1() const { return alpha1_; }
  std::optional<std::size_t> alpha2() const { return alpha2_; }
  bool is_axis(std::size_t label) const { return label < static_cast<std::size_t>(n_); }
  const std::string& name(std::size_t label) const { return names_.at(label); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> find(const std::string& name) const;

 private:
  int n_;
  std::vector<std::string> names_;
  std::optional<std::size_t> alpha1_;
  std::optional<std::size_t> alpha2_;
};

/// Finitely supported coordinate vector over a spanning basis. Zero
/// coordinates are never stored.
class Element {
 public:
  Element() = default;
  explicit Element(std::size_t dim) : dim_(dim) {}
  static Element unit(std::size_t dim, std::size_t label, const Rational& s = Rational(1));
  static Element from_dense(std::span<const Rational> v);

  std::size_t dim() const { return dim_; }
  const std::map<std::size_t, Rational>& coords() const { return coords_; }
  Rational coeff(std::size_t label) const;
  bool is_zero() const { return coords_.empty(); }

  /// this += s · unit(label)
  Element& add(std::size_t label, const Rational& s);
  /// this += s · other
  Element& axpy(const Rational& s, const Element& other);

  Element& operator+=(const Element& o) { return axpy(Rational(1), o); }
  Element& operator-=(const Element& o) { return axpy(Rational(-1), o); }
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Rational& s, const Element& a);
  Element operator-() const { return Rational(-1) * *this; }

  Vector dense() const;
  std::string str(const SpanningBasis& basis) const;

  friend bool operator==(const Element&, const Element&) = default;

 private:
  std::size_t dim_ = 0;
  std::map<std::size_t, Rational> coords_;
};

/// ⟨x, y⟩ under a Gram matrix on the same basis.
Rational pair(const Matrix& gram, const Element& x, const Element& y);

/// Applies a square matrix whose column j is the image of label j.
Element apply(const Matrix& m, const Element& x);

}  // namespace isingpair
