#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "isingpair/linalg/matrix.hpp"

namespace isingpair {

/// Outcome of an exact symmetric-pivoted LDLᵀ elimination.
struct PsdCertificate {
  std::size_t rank = 0;
  bool is_psd = false;
  bool is_pd = false;
  /// Diagonal pivots in the order they were taken (indices into G).
  std::vector<std::size_t> pivot_order;
  std::vector<Rational> pivots;
  /// Present exactly when !is_psd; satisfies xᵀ G x < 0.
  std::optional<Vector> witness;
};

/// Pivot rule: the first remaining index with a nonzero diagonal entry.
/// Throws std::invalid_argument for non-symmetric input.
PsdCertificate psd_certificate(const Matrix& g);

}  // namespace isingpair
