#include "isingpair/model/gram.hpp"

#include <stdexcept>
#include <string>

#include "isingpair/linalg/solve.hpp"
#include "isingpair/model/errors.hpp"

namespace isingpair {

namespace {

const Rational kQuarter(1, 4);

[[noreturn]] void disagree(const std::string& what, const Rational& a, const Rational& b) {
  throw AlgebraError(ErrorCode::inconsistent_parameters, what + " has two values: " + a.str() + " and " + b.str());
}

Rational axis_row_pair(const Matrix& g, std::size_t axis, const Element& x) {
  Rational s;
  for (const auto& [label, c] : x.coords()) s += c * g(axis, label);
  return s;
}

}  // namespace

DirectRules::DirectRules(const RelationChain& chain, std::vector<Rational> mu) : chain_(&chain), mu_(std::move(mu)) {}

Rational DirectRules::axis_pair(int j, int k) const {
  return mu_.at(static_cast<std::size_t>(chain_->model().distance(j, k)));
}

std::optional<Rational> DirectRules::axis_alpha(int j, int p, int q) const {
  const auto& m = chain_->model();
  if (m.mod(p) == m.mod(q)) return Rational(15, 8) * axis_pair(j, p);
  if (m.mod(j) == m.mod(q)) std::swap(p, q);
  if (m.mod(j) == m.mod(p)) return Rational(31, 16) * axis_pair(p, q) - Rational(1, 64);
  if (m.mod(2 * j - p) == m.mod(q)) {
    return Rational(15, 8) * axis_pair(j, p) - Rational(1, 16) * (kQuarter - axis_pair(p, q));
  }
  return std::nullopt;
}

Element DirectRules::phi_plus(int c, int b) const {
  Element out = Rational(1, 2) * chain_->axis(b);
  out.axpy(Rational(1, 2), chain_->axis(2 * c - b));
  return out;
}

Element DirectRules::phi_minus(int c, int b) const {
  Element out = Rational(1, 2) * chain_->axis(b);
  out.axpy(Rational(-1, 2), chain_->axis(2 * c - b));
  return out;
}

Element DirectRules::axis_times_own_alpha(int c, int b) const {
  Element out = Rational(7, 16) * chain_->alpha_symbol(c, b);
  out.axpy(Rational(3) * scaled(c, b) - Rational(25, 256), chain_->axis(c));
  out.axpy(Rational(7, 256), phi_plus(c, b));
  return out;
}

Rational GramTable::mu_at(int d) const {
  const int period = n;
  int r = ((d % period) + period) % period;
  if (r > period - r) r = period - r;
  return mu.at(static_cast<std::size_t>(r));
}

void check_identifications(int n, const ParamRecord& p) {
  const Rational one(1);
  auto fail = [&](const std::string& why) {
    throw AlgebraError(ErrorCode::inconsistent_parameters,
                       "n=" + std::to_string(n) + " with lambda1=" + p.lambda1.str() + ", lambda2=" + p.lambda2.str() +
                           ": " + why);
  };
  if (n == 1) {
    if (p.lambda1 != one || p.lambda2 != one) fail("e = f forces lambda1 = lambda2 = 1");
    return;
  }
  if (n == 2) {
    if (p.lambda2 != one) fail("e^{tau_f} = e forces lambda2 = 1");
    if (p.lambda1 == one) fail("e != f forces lambda1 != 1");
    return;
  }
  if (p.lambda1 == one || p.lambda2 == one) fail("distinct axes force lambda != 1");
  if (n == 3 && p.lambda2 != p.lambda1) fail("e^{tau_f} is adjacent to e, forcing lambda2 = lambda1");
}

GramTable derive_gram(const RelationChain& chain) {
  const OrbitModel& model = chain.model();
  const SpanningBasis& basis = chain.basis();
  const ParamRecord& params = chain.params();
  const int n = model.n;
  if (n > 6) throw std::invalid_argument("derive_gram: n must be at most 6");
  check_identifications(n, params);

  GramTable out;
  out.n = n;
  out.mu.assign(static_cast<std::size_t>(model.period / 2 + 1), Rational(0));
  out.mu[0] = kQuarter;
  if (n >= 2) out.mu[1] = params.bracket1();
  if (n >= 4) out.mu[2] = params.bracket2();

  if (n == 6) {
    // ⟨e, R⟩ = 0 is affine in mu(3); read off the constant and the slope.
    auto pairing_with_e = [&](const std::vector<Rational>& mu) {
      DirectRules rules(chain, mu);
      Rational s;
      const auto& rel = ef_relation();
      for (const auto& t : rel.axes) s += Rational(t.sign) * coefficient(t.coef)(params) * rules.axis_pair(-1, t.index);
      for (const auto& t : rel.alphas) {
        auto v = rules.axis_alpha(-1, t.p, t.q);
        if (!v) throw AlgebraError(ErrorCode::not_derivable, "pairing of e with the e-f relation");
        s += Rational(t.sign) * *v;
      }
      return s;
    };
    std::vector<Rational> probe = out.mu;
    const Rational k0 = pairing_with_e(probe);
    probe[3] = Rational(1);
    const Rational slope = pairing_with_e(probe) - k0;
    if (slope.is_zero()) throw AlgebraError(ErrorCode::not_derivable, "mu(3) does not enter the e-f pairing");
    out.mu[3] = -k0 / slope;
  }

  const DirectRules rules(chain, out.mu);
  const std::size_t dim = basis.size();
  Matrix g(dim, dim);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) g(basis.axis(j), basis.axis(k)) = rules.axis_pair(j, k);

  if (auto a1 = basis.alpha1()) {
    const Rational v = Rational(31, 16) * out.mu[1] - Rational(1, 64);
    for (int j = 0; j < n; ++j) {
      for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
          if (model.distance(p, q) != 1) continue;
          if (auto w = rules.axis_alpha(j, p, q); w && *w != v) disagree("<a" + std::to_string(j) + ", alpha1>", v, *w);
        }
      }
      g(basis.axis(j), *a1) = v;
      g(*a1, basis.axis(j)) = v;
    }
  }

  if (auto a2 = basis.alpha2()) {
    for (int j = 0; j < n; ++j) {
      std::optional<Rational> value;
      for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) {
          if (model.distance(p, q) != 2) continue;
          auto direct = rules.axis_alpha(j, p, q);
          if (!direct) continue;
          const Element d = chain.alpha_symbol(p, q);
          const Rational c2 = d.coeff(*a2);
          if (c2.is_zero()) continue;
          Rational rest = *direct;
          for (const auto& [label, c] : d.coords()) {
            if (label == *a2) continue;
            rest -= c * g(basis.axis(j), label);
          }
          const Rational v = rest / c2;
          if (value && *value != v) disagree("<a" + std::to_string(j) + ", alpha2>", *value, v);
          value = v;
        }
      }
      if (!value) throw AlgebraError(ErrorCode::not_derivable, "<a" + std::to_string(j) + ", alpha2>");
      g(basis.axis(j), *a2) = *value;
      g(*a2, basis.axis(j)) = *value;
    }
  }

  // α–α entries: ⟨α(c,a), α(c,b)⟩ = ⟨a, c·α(c,b)⟩ − (1/16)⟨c + a, α(c,b)⟩
  // over every admissible (c, a, b), solved as one linear system.
  std::vector<std::size_t> alphas;
  if (basis.alpha1()) alphas.push_back(*basis.alpha1());
  if (basis.alpha2()) alphas.push_back(*basis.alpha2());
  if (!alphas.empty()) {
    std::vector<std::pair<std::size_t, std::size_t>> unknowns;
    for (std::size_t u = 0; u < alphas.size(); ++u)
      for (std::size_t v = u; v < alphas.size(); ++v) unknowns.emplace_back(alphas[u], alphas[v]);
    auto unknown_index = [&](std::size_t x, std::size_t y) {
      for (std::size_t i = 0; i < unknowns.size(); ++i) {
        const auto& [u, v] = unknowns[i];
        if ((u == x && v == y) || (u == y && v == x)) return i;
      }
      return unknowns.size();
    };
    std::vector<Vector> rows;
    Vector rhs;
    for (int c = 0; c < n; ++c) {
      for (int a = 0; a < n; ++a) {
        if (model.distance(c, a) > 2) continue;
        for (int b = 0; b < n; ++b) {
          if (model.distance(c, b) > 2) continue;
          const Element x = chain.alpha_symbol(c, a);
          const Element y = chain.alpha_symbol(c, b);
          const Element cy = rules.axis_times_own_alpha(c, b);
          Rational value = axis_row_pair(g, basis.axis(a), cy) -
                           Rational(1, 16) * (axis_row_pair(g, basis.axis(c), y) + axis_row_pair(g, basis.axis(a), y));
          Vector row(unknowns.size());
          bool any = false;
          for (const auto& [lx, cx] : x.coords()) {
            for (const auto& [ly, cyv] : y.coords()) {
              if (basis.is_axis(lx) || basis.is_axis(ly)) {
                value -= cx * cyv * g(lx, ly);
              } else {
                row[unknown_index(lx, ly)] += cx * cyv;
                any = true;
              }
            }
          }
          if (!any) {
            if (!value.is_zero()) {
              disagree("<alpha(a" + std::to_string(c) + ",a" + std::to_string(a) + "), alpha(a" + std::to_string(c) +
                           ",a" + std::to_string(b) + ")>",
                       Rational(0), value);
            }
            continue;
          }
          rows.push_back(std::move(row));
          rhs.push_back(value);
        }
      }
    }
    Matrix sys(rows.size(), unknowns.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t k = 0; k < unknowns.size(); ++k) sys(r, k) = rows[r][k];
    const LinearSolution sol = solve_linear(sys, rhs);
    if (!sol.consistent) {
      throw AlgebraError(ErrorCode::inconsistent_parameters, "alpha-alpha inner products are overdetermined and disagree");
    }
    if (!sol.free_cols.empty()) {
      throw AlgebraError(ErrorCode::not_derivable, "alpha-alpha inner products are underdetermined");
    }
    for (std::size_t k = 0; k < unknowns.size(); ++k) {
      const auto& [u, v] = unknowns[k];
      g(u, v) = sol.particular[k];
      g(v, u) = sol.particular[k];
    }
  }

  out.matrix = std::move(g);
  return out;
}

GramTable derive_gram(const OrbitModel& model, const ParamRecord& params) {
  const RelationChain chain(model, params);
  return derive_gram(chain);
}

}  // namespace isingpair
