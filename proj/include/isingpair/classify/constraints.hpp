#pragma once

#include <string>
#include <vector>

#include "isingpair/classify/polynomial.hpp"
#include "isingpair/model/relations.hpp"

namespace isingpair {

/// Variables of every constraint polynomial: x0 = λ₁, x1 = λ₂.
inline constexpr std::size_t kLambda1 = 0;
inline constexpr std::size_t kLambda2 = 1;
const std::vector<std::string>& lambda_names();

Polynomial to_polynomial(const LambdaQuadratic& q);

struct Constraint {
  /// Primitive (integer, content 1) form; vanishes on admissible parameters.
  Polynomial poly;
  std::vector<std::string> provenance;
};

struct ConstraintSystem {
  int n = 0;
  std::vector<Constraint> equations;
};

/// The relations specialised to orbit size n:
///  * orbit identifications (λ₂ = (a_{-1}|a_1) collapses to 1 or λ₁ for n ≤ 3),
///  * the e−f relation, when all of its α-symbols collapse (n ≤ 3), one
///    equation per axis coordinate,
///  * the φ_f⁻ relation, one equation per independent φ_f⁻(a_k), 0 < k < n/2,
///  * for n = 4, the n = 2 system for the pair (e, e^{τ_f}) with λ₁ ↦ λ₂.
/// Identifications are substituted into the relation equations. Equations
/// that agree up to a scalar are merged, provenances joined.
/// Throws std::invalid_argument unless 1 ≤ n ≤ 6.
ConstraintSystem constraint_system(int n);

}  // namespace isingpair
