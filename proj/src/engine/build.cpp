#include <stdexcept>
#include <string>

#include "isingpair/engine/algebra.hpp"
#include "isingpair/linalg/solve.hpp"
#include "isingpair/model/errors.hpp"

namespace isingpair {

namespace {

struct Candidate {
  Element v;
  Element product;
  std::string route;
};

std::string idx(int j) { return "a" + std::to_string(j); }

void install_quotient(DihedralAlgebra& alg) {
  const Echelon ech = rref(alg.gram);
  alg.pivots = ech.pivot_cols;
  alg.rank = alg.pivots.size();
  alg.radical = kernel(alg.gram);
  const auto inv = inverse(alg.gram.principal(alg.pivots));
  if (!inv) throw AlgebraError(ErrorCode::not_closed, "Gram pivot block is singular");
  Matrix rows(alg.rank, alg.dim());
  for (std::size_t i = 0; i < alg.rank; ++i)
    for (std::size_t c = 0; c < alg.dim(); ++c) rows(i, c) = alg.gram(alg.pivots[i], c);
  alg.reduce = *inv * rows;
}

// Products a_j·v that follow directly from one axis: idempotency, the
// definition of α, the a·α(a,x) formula and the a·α(x, x^{τ_a}) formula.
std::vector<Candidate> axis_candidates(const DihedralAlgebra& alg, const RelationChain& chain,
                                       const DirectRules& rules, int j) {
  const OrbitModel& m = alg.orbit;
  const Element aj = chain.axis(j);
  std::vector<Candidate> out;
  out.push_back({aj, Rational(2) * aj, idx(j) + "^2"});
  for (int k : {j + 1, j - 1, j + 2, j - 2}) {
    const int d = m.distance(j, k);
    if (d == 0 || d > 2) continue;
    Element p = chain.alpha_symbol(j, k);
    p.axpy(Rational(1, 16), aj);
    p.axpy(Rational(1, 16), chain.axis(k));
    out.push_back({chain.axis(k), p, idx(m.mod(j)) + "*" + idx(m.mod(k))});
  }
  for (int k : {j + 1, j - 1, j + 2, j - 2}) {
    const int d = m.distance(j, k);
    if (d == 0 || d > 2) continue;
    out.push_back({chain.alpha_symbol(j, k), rules.axis_times_own_alpha(j, k),
                   idx(m.mod(j)) + "*alpha(" + idx(m.mod(j)) + "," + idx(m.mod(k)) + ")"});
  }
  if (m.n >= 2) {
    // φ¹_{a_j}(a_y) = 2α(a_j,a_y) − (4(a_j|a_y) − 1/8)a_j + (1/8)φ⁺_{a_j}(a_y)
    auto phi1 = [&](int y) {
      Element p = Rational(2) * chain.alpha_symbol(j, y);
      p.axpy(-(Rational(4) * rules.scaled(j, y) - Rational(1, 8)), aj);
      p.axpy(Rational(1, 8), rules.phi_plus(j, y));
      return p;
    };
    for (int x : {j + 1, j - 1}) {
      const Element v = chain.alpha_symbol(x, 2 * j - x);
      const Rational lambda = rules.scaled(j, x);
      Element p = Rational(8) * pair(alg.gram, aj, v) * aj;
      p.axpy(Rational(8, 3) * (Rational(4) * lambda + Rational(1, 4)), phi1(x));
      p.axpy(Rational(8, 3) * Rational(7, 256), phi1(2 * x - j));
      p.axpy(Rational(-17, 16), phi1(x));
      out.push_back({v, p, idx(m.mod(j)) + "*alpha(" + idx(m.mod(x)) + "," + idx(m.mod(2 * j - x)) + ")"});
    }
  }
  return out;
}

std::vector<Element> axis_row(const DihedralAlgebra& alg, const RelationChain& chain, const DirectRules& rules,
                              int j) {
  const std::vector<Candidate> cands = axis_candidates(alg, chain, rules, j);
  const std::size_t r = alg.rank;
  std::vector<std::size_t> kept;
  std::vector<Vector> kept_coords;
  std::size_t current = 0;
  for (std::size_t i = 0; i < cands.size() && current < r; ++i) {
    const Vector c = alg.coordinates(cands[i].v);
    Matrix trial(r, kept_coords.size() + 1);
    for (std::size_t k = 0; k < kept_coords.size(); ++k) trial.set_column(k, kept_coords[k]);
    trial.set_column(kept_coords.size(), c);
    const std::size_t rk = rank(trial);
    if (rk > current) {
      current = rk;
      kept.push_back(i);
      kept_coords.push_back(c);
    }
  }
  if (current < r) {
    throw AlgebraError(ErrorCode::not_closed,
                       "products with " + idx(j) + " reach only " + std::to_string(current) + " of " +
                           std::to_string(r) + " dimensions");
  }
  Matrix vq(r, r);
  for (std::size_t k = 0; k < r; ++k) vq.set_column(k, kept_coords[k]);
  const Matrix vinv = *inverse(vq);

  auto express = [&](const Element& v) {
    const Vector c = vinv * alg.coordinates(v);
    Element out(alg.dim());
    for (std::size_t k = 0; k < r; ++k) out.axpy(c[k], cands[kept[k]].product);
    return alg.canonical(out);
  };

  for (std::size_t i = 0; i < cands.size(); ++i) {
    const Element predicted = express(cands[i].v);
    if (!alg.congruent(predicted, cands[i].product)) {
      throw AlgebraError(ErrorCode::inconsistent_parameters,
                         cands[i].route + " is " + alg.canonical(cands[i].product).str(alg.basis) +
                             " directly but " + predicted.str(alg.basis) + " through the other rules");
    }
  }

  std::vector<Element> row;
  for (std::size_t label = 0; label < alg.dim(); ++label) row.push_back(express(alg.label(label)));
  return row;
}

}  // namespace

DihedralAlgebra build_algebra(int n, const ParamRecord& params) {
  if (n < 1 || n > 6) throw std::invalid_argument("build_algebra: n must lie in [1, 6]");
  check_identifications(n, params);
  const RelationChain chain(build_orbit(n), params);

  DihedralAlgebra alg;
  alg.n = n;
  alg.params = params;
  alg.orbit = chain.model();
  alg.basis = chain.basis();
  alg.gram_table = derive_gram(chain);
  alg.gram = alg.gram_table.matrix;
  install_quotient(alg);

  const std::size_t d = alg.dim();
  const DirectRules rules(chain, alg.gram_table.mu);

  // Worklist over unordered label pairs. Axis pairs resolve once the row of
  // their axis is known; α–α pairs wait until every axis row is in place.
  std::vector<std::vector<std::optional<Element>>> slots(d, std::vector<std::optional<Element>>(d));
  std::vector<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = i; k < d; ++k) pending.emplace_back(i, k);
  std::size_t open_axis_pairs = 0;
  for (const auto& [i, k] : pending)
    if (alg.basis.is_axis(i) || alg.basis.is_axis(k)) ++open_axis_pairs;

  alg.table.assign(d, std::vector<Element>(d, Element(d)));
  std::vector<bool> row_done(static_cast<std::size_t>(n), false);
  const std::size_t cap = 10 * d * d;
  std::size_t steps = 0;
  while (!pending.empty()) {
    std::vector<std::pair<std::size_t, std::size_t>> deferred;
    for (const auto& [i, k] : pending) {
      if (++steps > cap) throw AlgebraError(ErrorCode::iteration_cap, "closure did not settle");
      if (alg.basis.is_axis(i) || alg.basis.is_axis(k)) {
        const std::size_t ax = alg.basis.is_axis(i) ? i : k;
        const std::size_t other = ax == i ? k : i;
        if (!row_done[ax]) {
          const auto row = axis_row(alg, chain, rules, static_cast<int>(ax));
          for (std::size_t l = 0; l < d; ++l) alg.table[ax][l] = row[l];
          row_done[ax] = true;
        }
        slots[i][k] = alg.table[ax][other];
        --open_axis_pairs;
        continue;
      }
      if (open_axis_pairs > 0) {
        deferred.emplace_back(i, k);
        continue;
      }
      // Both labels are α-generators: α₁ = α(e, f), α₂ = α(e, e^{τ_f}).
      const int x = (i == *alg.basis.alpha1()) ? 0 : 1;
      const int y = (k == *alg.basis.alpha1()) ? 0 : 1;
      slots[i][k] = alpha_product(alg, -1, x, y);
    }
    // Axis rows are symmetric by construction; mirror them for the α–α stage.
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = i; k < d; ++k)
        if (slots[i][k]) {
          alg.table[i][k] = *slots[i][k];
          alg.table[k][i] = *slots[i][k];
        }
    pending = std::move(deferred);
  }

  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) alg.table[i][k] = alg.canonical(alg.table[i][k]);

  alg.tau_e = alg.index_map(alg.orbit.tau_e);
  alg.tau_f = alg.index_map(alg.orbit.tau_f);

  // Every α-product route must agree with the installed table.
  for (int c = 0; c < n; ++c) {
    for (int a = 0; a < n; ++a) {
      if (alg.orbit.distance(c, a) > 2) continue;
      for (int b = 0; b < n; ++b) {
        if (alg.orbit.distance(c, b) > 2) continue;
        const Element lhs = alg.product(alpha_of(alg, c, alg.axis(a)), alpha_of(alg, c, alg.axis(b)));
        const Element rhs = alpha_product(alg, c, a, b);
        if (lhs != rhs) {
          throw AlgebraError(ErrorCode::inconsistent_parameters,
                             "alpha(" + idx(c) + "," + idx(a) + ")*alpha(" + idx(c) + "," + idx(b) + ") is " +
                                 rhs.str(alg.basis) + " by the alpha-product formula but " + lhs.str(alg.basis) +
                                 " from the table");
        }
      }
    }
  }

  for (const auto& g : alg.orbit.group()) {
    const Element r = chain.relation_image(g);
    if (!alg.in_radical(r)) {
      throw AlgebraError(ErrorCode::inconsistent_parameters,
                         "an image of the e-f relation is nonzero: " + r.str(alg.basis));
    }
  }
  if (const Element r = chain.minus_residual(); !alg.in_radical(r)) {
    throw AlgebraError(ErrorCode::inconsistent_parameters, "the phi_f^- relation is nonzero: " + r.str(alg.basis));
  }
  return alg;
}

}  // namespace isingpair
