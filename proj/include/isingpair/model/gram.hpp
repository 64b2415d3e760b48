#pragma once

#include <optional>
#include <vector>

#include "isingpair/linalg/matrix.hpp"
#include "isingpair/model/relations.hpp"

namespace isingpair {

/// Closed-form consequences of a single axis acting on an α-symbol that
/// involves it, given ⟨a_j, a_k⟩ as a function of index distance.
class DirectRules {
 public:
  DirectRules(const RelationChain& chain, std::vector<Rational> mu);

  const RelationChain& chain() const { return *chain_; }
  const std::vector<Rational>& mu() const { return mu_; }

  Rational axis_pair(int j, int k) const;
  /// (a_j|a_k) = 4⟨a_j, a_k⟩
  Rational scaled(int j, int k) const { return Rational(4) * axis_pair(j, k); }

  /// ⟨a_j, α(a_p, a_q)⟩ when a_j is an endpoint, or the midpoint with
  /// a_q = a_p^{τ_{a_j}}; std::nullopt otherwise.
  std::optional<Rational> axis_alpha(int j, int p, int q) const;

  /// a_c · α(a_c, a_b) = (7/16)α + (3(a_c|a_b) − 25/2⁸)a_c + (7/2⁸)φ⁺_{a_c}(a_b).
  Element axis_times_own_alpha(int c, int b) const;

  /// φ±_{a_c}(a_b) = (a_b ± a_{2c−b})/2.
  Element phi_plus(int c, int b) const;
  Element phi_minus(int c, int b) const;

 private:
  const RelationChain* chain_;
  std::vector<Rational> mu_;
};

/// Inner products on the spanning set.
struct GramTable {
  int n = 0;
  /// mu[d] = ⟨a_j, a_{j+d}⟩ for 0 ≤ d ≤ period/2.
  std::vector<Rational> mu;
  /// Full symmetric Gram matrix on the SpanningBasis labels.
  Matrix matrix;

  Rational mu_at(int d) const;
  Rational cross(std::size_t i, std::size_t j) const { return matrix(i, j); }
};

/// Rejects (n, λ) combinations that contradict the orbit identifications:
/// n = 1 needs λ₁ = λ₂ = 1, n = 2 needs λ₂ = 1 ≠ λ₁, n = 3 needs λ₂ = λ₁ and
/// n ≥ 3 excludes λ = 1. Throws AlgebraError(inconsistent_parameters).
void check_identifications(int n, const ParamRecord& params);

/// Throws std::invalid_argument when n > 6; AlgebraError when two routes to
/// the same inner product disagree or an entry is underdetermined.
GramTable derive_gram(const RelationChain& chain);
GramTable derive_gram(const OrbitModel& model, const ParamRecord& params);

}  // namespace isingpair
