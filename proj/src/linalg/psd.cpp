#include "isingpair/linalg/psd.hpp"

#include <stdexcept>

#include "isingpair/linalg/solve.hpp"

namespace isingpair {

namespace {

// Extends a vector y on the not-yet-eliminated indices to x on all indices so
// that xᵀ G x equals yᵀ S y for the current Schur complement S.
Vector lift_witness(const Matrix& g, const std::vector<std::size_t>& pivots,
                    const std::vector<std::size_t>& rest, const Vector& y) {
  Vector x(g.rows());
  for (std::size_t k = 0; k < rest.size(); ++k) x[rest[k]] = y[k];
  if (pivots.empty()) return x;
  const Matrix gpp = g.principal(pivots);
  Vector rhs(pivots.size());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    Rational s;
    for (std::size_t k = 0; k < rest.size(); ++k) s += g(pivots[i], rest[k]) * y[k];
    rhs[i] = -s;
  }
  const LinearSolution sol = solve_linear(gpp, rhs);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = sol.particular[i];
  return x;
}

}  // namespace

PsdCertificate psd_certificate(const Matrix& g) {
  if (!g.is_symmetric()) throw std::invalid_argument("psd_certificate: matrix is not symmetric");
  PsdCertificate cert;
  cert.rank = rank(g);

  Matrix m = g;
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < g.rows(); ++i) rest.push_back(i);

  while (!rest.empty()) {
    std::size_t at = rest.size();
    for (std::size_t k = 0; k < rest.size(); ++k) {
      if (!m(rest[k], rest[k]).is_zero()) {
        at = k;
        break;
      }
    }
    if (at == rest.size()) {
      // Zero diagonal on the remainder: PSD iff the remainder vanishes.
      for (std::size_t i = 0; i < rest.size(); ++i) {
        for (std::size_t j = i + 1; j < rest.size(); ++j) {
          const Rational& b = m(rest[i], rest[j]);
          if (b.is_zero()) continue;
          Vector y(rest.size());
          y[i] = Rational(1);
          y[j] = Rational(-b.sign());
          cert.witness = lift_witness(g, cert.pivot_order, rest, y);
          return cert;
        }
      }
      break;
    }
    const std::size_t p = rest[at];
    const Rational d = m(p, p);
    if (d.sign() < 0) {
      Vector y(rest.size());
      y[at] = Rational(1);
      cert.witness = lift_witness(g, cert.pivot_order, rest, y);
      return cert;
    }
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(at));
    for (std::size_t i : rest) {
      if (m(i, p).is_zero()) continue;
      const Rational f = m(i, p) / d;
      for (std::size_t j : rest) m(i, j) -= f * m(p, j);
    }
    cert.pivot_order.push_back(p);
    cert.pivots.push_back(d);
  }
  cert.is_psd = true;
  cert.is_pd = cert.rank == g.rows();
  return cert;
}

}  // namespace isingpair
