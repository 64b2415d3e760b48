#include "isingpair/model/relations.hpp"

#include <algorithm>

#include "isingpair/model/errors.hpp"

namespace isingpair {

Rational LambdaQuadratic::operator()(const ParamRecord& p) const {
  return l1sq * p.lambda1 * p.lambda1 + l1 * p.lambda1 + l2 * p.lambda2 + constant;
}

const LambdaQuadratic& coefficient(Coef c) {
  static const LambdaQuadratic c1{Rational::pow2(11) / 7, Rational(-144, 7), Rational(8, 7), Rational(33, 112)};
  static const LambdaQuadratic c2{Rational(0), Rational(16), Rational(0), Rational(-3, 8)};
  static const LambdaQuadratic sixteenth{Rational(0), Rational(0), Rational(0), Rational(1, 16)};
  static const LambdaQuadratic ce{Rational::pow2(15) / 7, Rational(-512, 7), Rational(128, 7), Rational(-9, 7)};
  static const LambdaQuadratic cf{Rational(0), Rational(256), Rational(0), Rational(-5)};
  static const LambdaQuadratic one{Rational(0), Rational(0), Rational(0), Rational(1)};
  switch (c) {
    case Coef::c1: return c1;
    case Coef::c2: return c2;
    case Coef::sixteenth: return sixteenth;
    case Coef::ce: return ce;
    case Coef::cf: return cf;
    case Coef::one: return one;
  }
  return one;
}

std::string_view coef_name(Coef c) {
  switch (c) {
    case Coef::c1: return "c1";
    case Coef::c2: return "c2";
    case Coef::sixteenth: return "1/16";
    case Coef::ce: return "ce";
    case Coef::cf: return "cf";
    case Coef::one: return "1";
  }
  return "?";
}

const EfRelation& ef_relation() {
  static const EfRelation r{
      {{Coef::c1, 1, -1},
       {Coef::c1, -1, 0},
       {Coef::c2, 1, -2},
       {Coef::c2, -1, 1},
       {Coef::sixteenth, 1, -3},
       {Coef::sixteenth, -1, 2}},
      {{-1, -1, 1}, {1, -2, 0}}};
  return r;
}

const std::vector<MinusTerm>& minus_relation() {
  static const std::vector<MinusTerm> r{{Coef::ce, -1}, {Coef::cf, -2}, {Coef::one, -3}};
  return r;
}

RelationChain::RelationChain(OrbitModel model, const ParamRecord& params)
    : model_(std::move(model)), basis_(model_.n), params_(params) {
  if (model_.period < 4) return;
  const auto& rel = ef_relation();
  const auto group = model_.group();
  distance_two_.emplace(key(-1, 1), Element::unit(basis_.size(), *basis_.alpha2()));
  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& g : group) {
      const auto k0 = key(g[static_cast<std::size_t>(model_.mod(rel.alphas[0].p))],
                          g[static_cast<std::size_t>(model_.mod(rel.alphas[0].q))]);
      const auto k1 = key(g[static_cast<std::size_t>(model_.mod(rel.alphas[1].p))],
                          g[static_cast<std::size_t>(model_.mod(rel.alphas[1].q))]);
      const bool has0 = distance_two_.count(k0) > 0;
      const bool has1 = distance_two_.count(k1) > 0;
      if (has0 == has1) continue;
      // axes + s0·D(k0) + s1·D(k1) = 0
      const Element axes = axis_part(g);
      const int s0 = rel.alphas[0].sign;
      const int s1 = rel.alphas[1].sign;
      if (has0) {
        Element d = axes;
        d.axpy(Rational(s0), distance_two_.at(k0));
        distance_two_.emplace(k1, Rational(-s1) * d);
      } else {
        Element d = axes;
        d.axpy(Rational(s1), distance_two_.at(k1));
        distance_two_.emplace(k0, Rational(-s0) * d);
      }
      progress = true;
    }
  }
}

std::pair<int, int> RelationChain::key(int p, int q) const {
  p = model_.mod(p);
  q = model_.mod(q);
  return {std::min(p, q), std::max(p, q)};
}

Element RelationChain::axis(int j) const { return Element::unit(basis_.size(), basis_.axis(j)); }

Element RelationChain::alpha_symbol(int p, int q) const {
  const int d = model_.distance(p, q);
  if (d == 0) return Element::unit(basis_.size(), basis_.axis(p), Rational(15, 8));
  if (d == 1) return Element::unit(basis_.size(), *basis_.alpha1());
  if (d == 2) {
    auto it = distance_two_.find(key(p, q));
    if (it != distance_two_.end()) return it->second;
  }
  throw AlgebraError(ErrorCode::not_derivable, "alpha(a" + std::to_string(model_.mod(p)) + ", a" +
                                                   std::to_string(model_.mod(q)) + ") at distance " +
                                                   std::to_string(d));
}

Element RelationChain::axis_part(const Permutation& g) const {
  Element out(basis_.size());
  for (const auto& t : ef_relation().axes) {
    const int j = g[static_cast<std::size_t>(model_.mod(t.index))];
    out.add(basis_.axis(j), Rational(t.sign) * coefficient(t.coef)(params_));
  }
  return out;
}

Element RelationChain::relation_image(const Permutation& g) const {
  Element out = axis_part(g);
  for (const auto& t : ef_relation().alphas) {
    const int p = g[static_cast<std::size_t>(model_.mod(t.p))];
    const int q = g[static_cast<std::size_t>(model_.mod(t.q))];
    out.axpy(Rational(t.sign), alpha_symbol(p, q));
  }
  return out;
}

std::vector<Element> RelationChain::residuals() const {
  std::vector<Element> out;
  for (const auto& g : model_.group()) out.push_back(relation_image(g));
  return out;
}

Element RelationChain::minus_residual() const {
  Element out(basis_.size());
  for (const auto& t : minus_relation()) {
    const Rational c = coefficient(t.coef)(params_) / Rational(2);
    out.add(basis_.axis(t.index), c);
    out.add(basis_.axis(-t.index), -c);
  }
  return out;
}

}  // namespace isingpair
