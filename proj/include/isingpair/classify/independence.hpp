#pragma once

#include <array>
#include <span>
#include <string>

#include "isingpair/classify/polynomial.hpp"
#include "isingpair/linalg/matrix.hpp"

namespace isingpair {

/// λ_m = (f|a_m) = 4⟨f,a_m⟩ for m = 0…6, with λ_0 = 1 and λ_{-m} = λ_m.
struct LambdaSequence {
  std::array<Rational, 7> values{Rational(1), 0, 0, 0, 0, 0, 0};

  /// Builds from λ_1…λ_6. Throws std::invalid_argument on a wrong length or
  /// an entry outside [0, 1/3].
  static LambdaSequence from(std::span<const Rational> lambdas);
  const Rational& at(int m) const;
};

bool in_scan_bounds(const Rational& lambda);

enum class Verdict { positive, zero, negative };
std::string verdict_name(Verdict v);

/// A = (μ_{j,k})_{1≤j,k≤3} with μ_{j,k} = 2(φ_f⁻(a_j)|φ_f⁻(a_k)) = λ_{k−j} − λ_{k+j}.
struct MuMatrix {
  LambdaSequence lambda_seq;
  Matrix A;
  Rational m1;
  Rational m2;
  Rational det;
  Verdict verdict = Verdict::zero;
};

Rational mu_entry(const LambdaSequence& seq, int j, int k);

/// Throws std::invalid_argument on bound violations and std::logic_error if
/// the regrouped M₂ fails to reproduce det A − M₁.
MuMatrix independence_certificate(std::span<const Rational> lambdas);
MuMatrix independence_certificate(const LambdaSequence& seq);

/// The three determinant pieces as polynomials in the six μ entries, ordered
/// μ11, μ22, μ33, μ12, μ13, μ23.
enum MuVar : std::size_t { kMu11, kMu22, kMu33, kMu12, kMu13, kMu23, kMuCount };
const std::vector<std::string>& mu_names();
Polynomial det_polynomial();
Polynomial m1_polynomial();
/// M₂ as the sum of the three (μ_ii − 2/3)(…) products.
Polynomial m2_regrouped_polynomial();

/// M₁ + M₂ − det A expanded in the μ's; identically zero.
Polynomial regrouping_residual();

}  // namespace isingpair
