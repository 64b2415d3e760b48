#include "isingpair/classify/independence.hpp"

#include <stdexcept>

#include "isingpair/linalg/solve.hpp"

namespace isingpair {

namespace {

const Rational kTwoThirds(2, 3);
const Rational kFourNinths(4, 9);
const Rational kEight27(8, 27);

Rational m1_value(const Rational& m12, const Rational& m13, const Rational& m23) {
  return kEight27 - kTwoThirds * (m12 * m12 + m23 * m23 + m13 * m13) + Rational(2) * m12 * m23 * m13;
}

Rational m2_value(const Matrix& a) {
  const Rational &m11 = a(0, 0), &m22 = a(1, 1), &m33 = a(2, 2);
  const Rational &m12 = a(0, 1), &m13 = a(0, 2), &m23 = a(1, 2);
  return (m11 - kTwoThirds) * (m22 * m33 - m23 * m23) + (m22 - kTwoThirds) * (kTwoThirds * m33 - m13 * m13) +
         (m33 - kTwoThirds) * (kFourNinths - m12 * m12);
}

Polynomial var(MuVar v) { return Polynomial::variable(kMuCount, v); }
Polynomial cst(const Rational& c) { return Polynomial::constant(kMuCount, c); }

}  // namespace

bool in_scan_bounds(const Rational& lambda) { return lambda.sign() >= 0 && lambda <= Rational(1, 3); }

LambdaSequence LambdaSequence::from(std::span<const Rational> lambdas) {
  if (lambdas.size() != 6) throw std::invalid_argument("lambda sequence needs lambda_1 ... lambda_6");
  LambdaSequence seq;
  for (std::size_t m = 0; m < 6; ++m) {
    if (!in_scan_bounds(lambdas[m]))
      throw std::invalid_argument("lambda_" + std::to_string(m + 1) + " = " + lambdas[m].str() +
                                  " violates 0 <= lambda <= 1/3");
    seq.values[m + 1] = lambdas[m];
  }
  return seq;
}

const Rational& LambdaSequence::at(int m) const {
  const int k = m < 0 ? -m : m;
  if (k > 6) throw std::out_of_range("lambda index beyond 6");
  return values[static_cast<std::size_t>(k)];
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::positive: return "positive";
    case Verdict::zero: return "zero";
    case Verdict::negative: return "negative";
  }
  return "zero";
}

Rational mu_entry(const LambdaSequence& seq, int j, int k) { return seq.at(k - j) - seq.at(k + j); }

MuMatrix independence_certificate(std::span<const Rational> lambdas) {
  return independence_certificate(LambdaSequence::from(lambdas));
}

MuMatrix independence_certificate(const LambdaSequence& seq) {
  MuMatrix out;
  out.lambda_seq = seq;
  out.A = Matrix(3, 3);
  for (int j = 1; j <= 3; ++j)
    for (int k = 1; k <= 3; ++k)
      out.A(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(k - 1)) = mu_entry(seq, j, k);
  out.det = determinant(out.A);
  out.m1 = m1_value(out.A(0, 1), out.A(0, 2), out.A(1, 2));
  out.m2 = m2_value(out.A);
  if (out.m1 + out.m2 != out.det) throw std::logic_error("M1 + M2 differs from det A");
  out.verdict = out.det.sign() > 0 ? Verdict::positive : out.det.is_zero() ? Verdict::zero : Verdict::negative;
  return out;
}

const std::vector<std::string>& mu_names() {
  static const std::vector<std::string> names{"mu11", "mu22", "mu33", "mu12", "mu13", "mu23"};
  return names;
}

Polynomial det_polynomial() {
  const auto a = var(kMu11), b = var(kMu22), c = var(kMu33);
  const auto x = var(kMu12), y = var(kMu13), z = var(kMu23);
  return a * b * c + cst(2) * x * z * y - a * z.pow(2) - b * y.pow(2) - c * x.pow(2);
}

Polynomial m1_polynomial() {
  const auto x = var(kMu12), y = var(kMu13), z = var(kMu23);
  return cst(kEight27) - kTwoThirds * (x.pow(2) + z.pow(2) + y.pow(2)) + cst(2) * x * z * y;
}

Polynomial m2_regrouped_polynomial() {
  const auto a = var(kMu11), b = var(kMu22), c = var(kMu33);
  const auto x = var(kMu12), y = var(kMu13), z = var(kMu23);
  const auto t = cst(kTwoThirds);
  return (a - t) * (b * c - z.pow(2)) + (b - t) * (t * c - y.pow(2)) + (c - t) * (cst(kFourNinths) - x.pow(2));
}

Polynomial regrouping_residual() { return m1_polynomial() + m2_regrouped_polynomial() - det_polynomial(); }

}  // namespace isingpair
