#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "isingpair/model/gram.hpp"

namespace isingpair {

/// The algebra B_{e,f} on its spanning set. Products are stored as canonical
/// representatives: every element is reduced modulo the Gram radical onto
/// the pivot labels (the first labels that are independent under the form).
struct DihedralAlgebra {
  int n = 0;
  ParamRecord params;
  OrbitModel orbit;
  SpanningBasis basis{1};
  GramTable gram_table;
  Matrix gram;
  /// table[i][j] = label_i · label_j
  std::vector<std::vector<Element>> table;
  /// Column j is the image of label j.
  Matrix tau_e;
  Matrix tau_f;
  std::size_t rank = 0;
  std::vector<Vector> radical;
  std::vector<std::size_t> pivots;
  /// rank × dim; maps formal coordinates to coordinates on the pivot labels.
  Matrix reduce;

  std::size_t dim() const { return basis.size(); }
  Element label(std::size_t i) const { return Element::unit(dim(), i); }
  Element axis(int j) const { return Element::unit(dim(), basis.axis(j)); }

  Element canonical(const Element& x) const;
  /// x ≡ y modulo the radical.
  bool congruent(const Element& x, const Element& y) const;
  bool in_radical(const Element& x) const;
  Rational inner(const Element& x, const Element& y) const { return pair(gram, x, y); }
  Element product(const Element& x, const Element& y) const;

  /// Matrix of the index permutation g (any dihedral symmetry of the index
  /// cycle) on the spanning set.
  Matrix index_map(const Permutation& g) const;
  /// τ_{a_j}.
  Matrix tau_axis(int j) const { return index_map(orbit.reflection_about(j)); }

  /// Canonical quotient coordinates (length rank).
  Vector coordinates(const Element& x) const;
};

/// Runs the closure: Gram, axis rows from the direct rules, α–α products
/// from the α-product formula, then the relation checks. Throws
/// std::invalid_argument for n outside [1, 6] and AlgebraError when two
/// derivations disagree modulo the radical or a product leaves the span.
DihedralAlgebra build_algebra(int n, const ParamRecord& params);

/// α(a_j, x) = a_j·x − (a_j + x)/16.
Element alpha_of(const DihedralAlgebra& alg, int j, const Element& x);

enum class Channel { plus, minus, zero, one };
/// "+", "-", "0" or "1"; throws std::invalid_argument otherwise.
Channel parse_channel(std::string_view text);

/// φ± = (1 ± τ_a)/2, φ¹ = 2a·x − 4(a|x)a − φ⁻/8 and φ⁰ = φ⁺ − φ¹ (the
/// projection onto B_a(0) = ℝa ⊕ E_a(0)).
Element project_channel(const DihedralAlgebra& alg, int j, const Element& x, Channel channel);

Element axis_product(const DihedralAlgebra& alg, int j, const Element& v);

/// α(a_a, a_x)·α(a_a, a_y) by literal evaluation of the α-product formula
/// using only axis products.
Element alpha_product(const DihedralAlgebra& alg, int a, int x, int y);

}  // namespace isingpair
