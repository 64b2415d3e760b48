#include "isingpair/linalg/solve.hpp"

#include <stdexcept>
#include <utility>

namespace isingpair {

namespace {

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

}  // namespace

Echelon rref(const Matrix& a) {
  Echelon out{a, {}, {}};
  Matrix& m = out.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) {
      out.free_cols.push_back(col);
      continue;
    }
    swap_rows(m, row, piv);
    const Rational inv = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
      }
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  return out;
}

std::size_t rank(const Matrix& a) { return rref(a).pivot_cols.size(); }

Rational determinant(const Matrix& a) {
  if (!a.square()) throw std::invalid_argument("determinant of non-square matrix");
  Matrix m = a;
  Rational det(1);
  const std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m(piv, col).is_zero()) ++piv;
    if (piv == n) return Rational();
    if (piv != col) {
      swap_rows(m, piv, col);
      det = -det;
    }
    det *= m(col, col);
    const Rational inv = m(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      const Rational f = m(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

std::vector<Vector> kernel(const Matrix& a) {
  const Echelon e = rref(a);
  std::vector<Vector> basis;
  for (std::size_t free : e.free_cols) {
    Vector v(a.cols());
    v[free] = Rational(1);
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) v[e.pivot_cols[i]] = -e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (!a.square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = a.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n + r) = Rational(1);
  }
  const Echelon e = rref(aug);
  if (e.pivot_cols.size() < n || e.pivot_cols[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

LinearSolution solve_linear(const Matrix& a, std::span<const Rational> b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve_linear: rows(A) != length(b)");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  const Echelon e = rref(aug);
  LinearSolution out;
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == a.cols()) return out;
  out.consistent = true;
  out.particular.assign(a.cols(), Rational());
  for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) out.particular[e.pivot_cols[i]] = e.reduced(i, a.cols());
  for (std::size_t free : e.free_cols) {
    if (free == a.cols()) continue;
    Vector v(a.cols());
    v[free] = Rational(1);
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) v[e.pivot_cols[i]] = -e.reduced(i, free);
    out.free_cols.push_back(free);
    out.directions.push_back(std::move(v));
  }
  return out;
}

}  // namespace isingpair
