#include "isingpair/engine/algebra.hpp"

#include <stdexcept>
#include <string>

#include "isingpair/linalg/solve.hpp"
#include "isingpair/model/errors.hpp"

namespace isingpair {

Vector DihedralAlgebra::coordinates(const Element& x) const {
  Vector out(rank);
  for (const auto& [label, c] : x.coords())
    for (std::size_t i = 0; i < rank; ++i)
      if (!reduce(i, label).is_zero()) out[i] += c * reduce(i, label);
  return out;
}

Element DihedralAlgebra::canonical(const Element& x) const {
  const Vector c = coordinates(x);
  Element out(dim());
  for (std::size_t i = 0; i < rank; ++i) out.add(pivots[i], c[i]);
  return out;
}

bool DihedralAlgebra::in_radical(const Element& x) const {
  for (std::size_t i = 0; i < dim(); ++i) {
    Rational s;
    for (const auto& [label, c] : x.coords()) s += gram(i, label) * c;
    if (!s.is_zero()) return false;
  }
  return true;
}

bool DihedralAlgebra::congruent(const Element& x, const Element& y) const { return in_radical(x - y); }

Element DihedralAlgebra::product(const Element& x, const Element& y) const {
  Element out(dim());
  for (const auto& [i, a] : x.coords())
    for (const auto& [j, b] : y.coords()) out.axpy(a * b, table[i][j]);
  return canonical(out);
}

Matrix DihedralAlgebra::index_map(const Permutation& g) const {
  const std::size_t d = dim();
  Matrix m(d, d);
  for (int k = 0; k < n; ++k) m(basis.axis(g[static_cast<std::size_t>(k)]), basis.axis(k)) = Rational(1);
  if (auto a1 = basis.alpha1()) m(*a1, *a1) = Rational(1);
  if (auto a2 = basis.alpha2()) {
    const int p = g[static_cast<std::size_t>(orbit.mod(-1))];
    const int q = g[static_cast<std::size_t>(orbit.mod(1))];
    const Element image = alpha_of(*this, p, axis(q));
    for (const auto& [label, c] : image.coords()) m(label, *a2) = c;
  }
  return m;
}

Element alpha_of(const DihedralAlgebra& alg, int j, const Element& x) {
  Element out = axis_product(alg, j, x);
  out.axpy(Rational(-1, 16), alg.axis(j));
  out.axpy(Rational(-1, 16), x);
  return alg.canonical(out);
}

Channel parse_channel(std::string_view text) {
  if (text == "+") return Channel::plus;
  if (text == "-") return Channel::minus;
  if (text == "0") return Channel::zero;
  if (text == "1") return Channel::one;
  throw std::invalid_argument("unknown projection channel '" + std::string(text) + "'");
}

namespace {

Element half_sum(const Element& x, const Element& tx, int sign) {
  Element out = Rational(1, 2) * x;
  out.axpy(Rational(sign, 2), tx);
  return out;
}

Element phi_one(const DihedralAlgebra& alg, int j, const Element& x, const Matrix& tau) {
  Element out = Rational(2) * axis_product(alg, j, x);
  out.axpy(Rational(-16) * alg.inner(alg.axis(j), x), alg.axis(j));
  out.axpy(Rational(-1, 8), half_sum(x, apply(tau, x), -1));
  return alg.canonical(out);
}

}  // namespace

Element project_channel(const DihedralAlgebra& alg, int j, const Element& x, Channel channel) {
  const Matrix tau = alg.tau_axis(j);
  switch (channel) {
    case Channel::plus: return alg.canonical(half_sum(x, apply(tau, x), 1));
    case Channel::minus: return alg.canonical(half_sum(x, apply(tau, x), -1));
    case Channel::one: return phi_one(alg, j, x, tau);
    case Channel::zero: return alg.canonical(half_sum(x, apply(tau, x), 1) - phi_one(alg, j, x, tau));
  }
  throw std::invalid_argument("project_channel: bad channel");
}

Element axis_product(const DihedralAlgebra& alg, int j, const Element& v) {
  const auto& row = alg.table[alg.basis.axis(j)];
  Element out(alg.dim());
  for (const auto& [label, c] : v.coords()) out.axpy(c, row[label]);
  return alg.canonical(out);
}

Element alpha_product(const DihedralAlgebra& alg, int a, int x, int y) {
  const Element ea = alg.axis(a);
  const Element ex = alg.axis(x);
  const Element ey = alg.axis(y);
  const Matrix tau = alg.tau_axis(a);

  Element big_a = axis_product(alg, y, alpha_of(alg, a, ex));
  big_a += axis_product(alg, x, alpha_of(alg, a, ey));

  const Element xp = half_sum(ex, apply(tau, ex), 1);
  const Element yp = half_sum(ey, apply(tau, ey), 1);
  Element xpyp(alg.dim());
  for (const auto& [label, c] : xp.coords()) xpyp.axpy(c, axis_product(alg, static_cast<int>(label), yp));

  const Rational lx = Rational(4) * alg.inner(ea, ex);
  const Rational ly = Rational(4) * alg.inner(ea, ey);

  Element out = Rational(3, 16) * half_sum(big_a, apply(tau, big_a), 1);
  out.axpy(Rational(7, 256), xpyp);
  out.axpy(Rational(6) * lx * ly - Rational(7, 32) * (lx + ly) + Rational(1, 128), ea);
  Element inner_arg = big_a;
  inner_arg.axpy(Rational(-7, 4) * (lx - Rational(1, 32)), ey);
  inner_arg.axpy(Rational(-7, 4) * (ly - Rational(1, 32)), ex);
  out.axpy(Rational(-1, 3), phi_one(alg, a, inner_arg, tau));
  return alg.canonical(out);
}

}  // namespace isingpair
