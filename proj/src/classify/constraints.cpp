#include "isingpair/classify/constraints.hpp"

#include <map>
#include <optional>
#include <stdexcept>

namespace isingpair {

namespace {

constexpr std::size_t kVars = 2;

Polynomial lam(std::size_t v) { return Polynomial::variable(kVars, v); }
Polynomial cst(const Rational& c) { return Polynomial::constant(kVars, c); }

// (a_j|a_k) for axes at distance d, as a polynomial.
Polynomial lambda_at_distance(int d) {
  if (d == 0) return cst(Rational(1));
  if (d == 1) return lam(kLambda1);
  if (d == 2) return lam(kLambda2);
  throw std::invalid_argument("no parameter for distance " + std::to_string(d));
}

struct Identification {
  std::size_t var;
  Polynomial value;
  std::string provenance;
};

std::vector<Identification> identifications(int n) {
  const OrbitModel m = build_orbit(n);
  std::vector<Identification> out;
  const int d1 = m.distance(-1, 0);
  const int d2 = m.distance(-1, 1);
  if (d1 != 1) out.push_back({kLambda1, lambda_at_distance(d1), "e = f"});
  if (d2 != 2) out.push_back({kLambda2, lambda_at_distance(d2), d2 == 0 ? "e^{tau_f} = e" : "e^{tau_f} = f^{tau_e}"});
  return out;
}

Polynomial specialise(Polynomial p, const std::vector<Identification>& ids) {
  for (const auto& id : ids) p = p.substitute(id.var, id.value);
  return p;
}

void add(std::vector<Constraint>& eqs, Polynomial p, const std::string& provenance) {
  if (p.is_zero()) return;
  p = p.primitive();
  for (auto& e : eqs) {
    if (e.poly.proportional(p)) {
      e.provenance.push_back(provenance);
      return;
    }
  }
  eqs.push_back({std::move(p), {provenance}});
}

// Coordinates of the e−f relation over the axes (and α₁) when no α-symbol
// of distance ≥ 2 survives; std::nullopt otherwise.
std::optional<std::map<std::string, Polynomial>> ef_coordinates(int n) {
  const OrbitModel m = build_orbit(n);
  std::map<std::string, Polynomial> coords;
  auto slot = [&](const std::string& key) -> Polynomial& {
    return coords.try_emplace(key, Polynomial(kVars)).first->second;
  };
  const auto& rel = ef_relation();
  for (const auto& t : rel.axes) {
    slot("a" + std::to_string(m.mod(t.index))) += Rational(t.sign) * to_polynomial(coefficient(t.coef));
  }
  for (const auto& t : rel.alphas) {
    const int d = m.distance(t.p, t.q);
    if (d == 0) {
      slot("a" + std::to_string(m.mod(t.p))) += cst(Rational(t.sign) * Rational(15, 8));
    } else if (d == 1) {
      slot("alpha1") += cst(Rational(t.sign));
    } else {
      return std::nullopt;
    }
  }
  return coords;
}

std::vector<Constraint> relation_equations(int n, const std::vector<Identification>& ids, const std::string& tag) {
  std::vector<Constraint> eqs;
  if (auto coords = ef_coordinates(n)) {
    for (const auto& [key, p] : *coords) add(eqs, specialise(p, ids), "e-f relation" + tag + ", coordinate " + key);
  }
  const OrbitModel m = build_orbit(n);
  std::map<int, Polynomial> minus;
  for (const auto& t : minus_relation()) {
    const int k = m.mod(t.index);
    const int mirror = m.mod(-k);
    if (k == mirror) continue;
    const int rep = std::min(k, mirror);
    const Rational sign(k == rep ? 1 : -1);
    minus.try_emplace(rep, Polynomial(kVars)).first->second += sign * to_polynomial(coefficient(t.coef));
  }
  for (const auto& [rep, p] : minus) {
    add(eqs, specialise(p, ids), "phi_f^- relation" + tag + ", coordinate phi_f^-(a" + std::to_string(rep) + ")");
  }
  return eqs;
}

}  // namespace

const std::vector<std::string>& lambda_names() {
  static const std::vector<std::string> names{"lambda1", "lambda2"};
  return names;
}

Polynomial to_polynomial(const LambdaQuadratic& q) {
  Polynomial p(kVars);
  p.add_term({2, 0}, q.l1sq);
  p.add_term({1, 0}, q.l1);
  p.add_term({0, 1}, q.l2);
  p.add_term({0, 0}, q.constant);
  return p;
}

ConstraintSystem constraint_system(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("constraint_system: n must lie in [1, 6]");
  ConstraintSystem sys;
  sys.n = n;
  const auto ids = identifications(n);
  for (const auto& id : ids) add(sys.equations, lam(id.var) - id.value, "identification " + id.provenance);
  for (auto& c : relation_equations(n, ids, "")) {
    for (const auto& p : c.provenance) add(sys.equations, c.poly, p);
  }
  if (n == 4) {
    // (e, e^{τ_f}) generates an orbit of size 2 whose own first parameter is λ₂.
    const auto sub_ids = identifications(2);
    for (auto& c : relation_equations(2, sub_ids, " for (e, e^{tau_f})")) {
      for (const auto& p : c.provenance) add(sys.equations, c.poly.substitute(kLambda1, lam(kLambda2)), p);
    }
  }
  return sys;
}

}  // namespace isingpair
