#pragma once

#include <cstddef>
#include <vector>

#include <json.hpp>

namespace isingpair {

/// Permutation of axis indices {0, …, period-1}; p[j] is the image of j.
using Permutation = std::vector<int>;

/// p ∘ q: apply q first, then p.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation identity_permutation(std::size_t n);
bool is_involution(const Permutation& p);
std::size_t order(const Permutation& p);

enum class Involution { e, f };

/// The axis family a_j generated from e and f by the two Miyamoto
/// involutions, with a_{2i} = f^{ρ^i}, a_{2i-1} = e^{ρ^i} and ρ = τ_e τ_f.
/// Indices are residues mod `period`; f = a_0 and e = a_{period-1}.
struct OrbitModel {
  int n = 0;
  int period = 0;
  Permutation tau_e;  // j ↦ -j-2
  Permutation tau_f;  // j ↦ -j

  int mod(int j) const;
  int e_index() const { return mod(-1); }
  int f_index() const { return 0; }

  /// Graph distance on the index cycle, in [0, period/2].
  int distance(int i, int j) const;

  /// e^T = f^T exactly when n is odd.
  bool fused() const { return n % 2 == 1; }
  std::vector<int> e_orbit() const;
  std::vector<int> f_orbit() const;

  /// τ_{a_j} as an index permutation: k ↦ 2j - k.
  Permutation reflection_about(int j) const;

  /// Distinct index permutations realised by T = ⟨τ_e, τ_f⟩: k ↦ ±k + 2i.
  std::vector<Permutation> group() const;
};

/// Throws std::invalid_argument unless 1 ≤ n ≤ 16.
OrbitModel build_orbit(int n);

const Permutation& involution_action(const OrbitModel& model, Involution which);

nlohmann::json to_json(const OrbitModel& model);

}  // namespace isingpair
