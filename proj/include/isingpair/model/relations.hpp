#pragma once

#include <map>
#include <string_view>
#include <utility>
#include <vector>

#include "isingpair/model/basis.hpp"
#include "isingpair/model/orbit_model.hpp"
#include "isingpair/model/params.hpp"

namespace isingpair {

/// l1sq·λ₁² + l1·λ₁ + l2·λ₂ + constant.
struct LambdaQuadratic {
  Rational l1sq;
  Rational l1;
  Rational l2;
  Rational constant;
  Rational operator()(const ParamRecord& p) const;
};

enum class Coef { c1, c2, sixteenth, ce, cf, one };

const LambdaQuadratic& coefficient(Coef c);
std::string_view coef_name(Coef c);

/// sign · coef · a_index (indices relative to e = a_{-1}, f = a_0).
struct AxisTerm {
  Coef coef;
  int sign;
  int index;
};

/// sign · α(a_p, a_q).
struct AlphaTerm {
  int sign;
  int p;
  int q;
};

/// The e−f relation
///   c1(e − f) + c2(f^{τ_e} − e^{τ_f}) + (1/16)(e^{τ_fτ_e} − f^{τ_eτ_f})
///     − (α(e,e^{τ_f}) − α(f,f^{τ_e})) = 0.
struct EfRelation {
  std::vector<AxisTerm> axes;
  std::vector<AlphaTerm> alphas;
};
const EfRelation& ef_relation();

/// ce·φ_f⁻(e) + cf·φ_f⁻(f^{τ_e}) + φ_f⁻(e^{τ_fτ_e}) = 0, as (coef, axis index).
struct MinusTerm {
  Coef coef;
  int index;
};
const std::vector<MinusTerm>& minus_relation();

/// Rewrites every α-symbol of distance ≤ 2 into the spanning basis by
/// propagating the e−f relation through all of its T-images, starting from
/// α(a_{-1}, a_1) = α₂.
class RelationChain {
 public:
  RelationChain(OrbitModel model, const ParamRecord& params);

  const OrbitModel& model() const { return model_; }
  const SpanningBasis& basis() const { return basis_; }
  const ParamRecord& params() const { return params_; }

  Element axis(int j) const;
  /// α(a_p, a_q). Distance 0 gives (15/8)a_p, distance 1 gives α₁. Throws
  /// AlgebraError(not_derivable) at distance ≥ 3.
  Element alpha_symbol(int p, int q) const;

  /// The image of the e−f relation under an index permutation from T,
  /// evaluated in the basis. Zero modulo the radical in any genuine algebra.
  Element relation_image(const Permutation& g) const;
  std::vector<Element> residuals() const;

  /// The φ_f⁻ relation evaluated in the basis (axes only).
  Element minus_residual() const;

 private:
  OrbitModel model_;
  SpanningBasis basis_;
  ParamRecord params_;
  std::map<std::pair<int, int>, Element> distance_two_;

  std::pair<int, int> key(int p, int q) const;
  Element axis_part(const Permutation& g) const;
};

}  // namespace isingpair
