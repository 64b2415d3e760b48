#pragma once

#include "isingpair/linalg/rational.hpp"

namespace isingpair {

/// The two parameters on the (a|x) = 4⟨a,x⟩ scale.
struct ParamRecord {
  Rational lambda1;  // (e|f)
  Rational lambda2;  // (e|e^{τ_f})

  /// Throws std::invalid_argument unless both values lie in [0, 1/3] ∪ {1}.
  static ParamRecord make(const Rational& lambda1, const Rational& lambda2);
  /// Same check, from values on the ⟨·,·⟩ scale.
  static ParamRecord from_bracket(const Rational& ef, const Rational& e_etf);

  Rational bracket1() const { return lambda1 / Rational(4); }
  Rational bracket2() const { return lambda2 / Rational(4); }

  friend bool operator==(const ParamRecord&, const ParamRecord&) = default;
};

bool lambda_in_bounds(const Rational& lambda);

}  // namespace isingpair
