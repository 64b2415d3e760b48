#pragma once

#include <cstddef>
#include <random>
#include <string>

namespace isingpair::testing {

struct PropertyTally {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what);
  bool ok() const { return cases > 0 && failures == 0; }
};

/// g(x·y) ≡ g(x)·g(y) for random g ∈ T and random basis pairs.
PropertyTally check_equivariance(std::mt19937_64& rng, std::size_t cases);
/// a(ax) ≡ ½ax + 3(a|x)a − (7/2⁸)φ_a⁻(x) for random axes and random elements.
PropertyTally check_square_identity(std::mt19937_64& rng, std::size_t cases);
/// ⟨a_j,a_k⟩ depends only on the index distance.
PropertyTally check_distance_gram(std::mt19937_64& rng, std::size_t cases);
/// φ⁺ + φ⁻ = id, a·φ⁻ ≡ φ⁻/16, a·φ¹ ≡ φ¹/2, a·(φ⁰ − (a|x)a) ≡ 0.
PropertyTally check_projections(std::mt19937_64& rng, std::size_t cases);
/// One symmetric structure constant perturbed along a pivot label must make
/// verify_axioms fail.
PropertyTally check_mutations(std::mt19937_64& rng, std::size_t cases);
/// Exchanging e and f with j ↦ −1−j is an automorphism (all rows, all pairs).
PropertyTally check_swap_symmetry();
/// φ_a¹(x⁺y⁺) ≡ (8/3)φ_a¹(A_a(x,y) − ((a|x) − 2⁻⁵)y − ((a|y) − 2⁻⁵)x) on all axis triples.
PropertyTally check_plus_plus_identity();
/// α(e,f)² from the α-product with e as the acting axis equals the one with f.
PropertyTally check_double_derivation();

}  // namespace isingpair::testing
