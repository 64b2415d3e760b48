#pragma once

#include <string>
#include <vector>

#include "isingpair/engine/algebra.hpp"

namespace isingpair {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct AxiomReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
  const CheckResult* find(const std::string& name) const;
};

/// Check names, in report order.
inline constexpr const char* kCheckNames[] = {
    "commutativity", "invariance",     "axis-idempotent", "adjoint-polynomial", "unique-2-eigenvector",
    "tau-eigenspaces", "tau-automorphism", "rho-order",   "fusion-rules",       "gram-psd",
    "rank-bound",
};

/// Failures are report entries, never exceptions. Everything past
/// commutativity and invariance is evaluated on the quotient by the radical.
AxiomReport verify_axioms(const DihedralAlgebra& alg);

/// Spectral data of ad_{a_j} on the quotient.
struct AxisSpectrum {
  Matrix ad;  // rank × rank
  /// Projectors onto the 2, 0, 1/2 and 1/16 eigenspaces, in that order,
  /// built as Lagrange interpolants of ad. Only meaningful when ad satisfies
  /// (t−2)t(t−1/2)(t−1/16) = 0.
  Matrix p2, p0, p_half, p_sixteenth;
};
AxisSpectrum axis_spectrum(const DihedralAlgebra& alg, int j);

/// Matrix of a formal linear map on the quotient coordinates.
Matrix quotient_map(const DihedralAlgebra& alg, const Matrix& formal);

}  // namespace isingpair
