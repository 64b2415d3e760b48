#include <gtest/gtest.h>

#include <algorithm>

#include "isingpair/classify/scan.hpp"
#include "isingpair/classify/solve.hpp"
#include "isingpair/engine/verify.hpp"
#include "isingpair/linalg/solve.hpp"

namespace isingpair {
namespace {

Rational q(std::int64_t p, std::int64_t d = 1) { return Rational(p, d); }

Polynomial l1() { return Polynomial::variable(2, kLambda1); }
Polynomial l2() { return Polynomial::variable(2, kLambda2); }
Polynomial c(const Rational& v) { return Polynomial::constant(2, v); }

bool contains(const ConstraintSystem& s, const Polynomial& p) {
  return std::any_of(s.equations.begin(), s.equations.end(),
                     [&](const Constraint& e) { return e.poly.proportional(p); });
}

TEST(PolynomialArith, ExpandAndSubstitute) {
  const Polynomial p = (c(32) * l1() - c(1)) * (c(64) * l1() + c(1));
  EXPECT_EQ(p, c(2048) * l1().pow(2) + c(32 - 64) * l1() - c(1));
  EXPECT_EQ(p.substitute(kLambda1, q(1, 32)), Polynomial(2));
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.degree_in(kLambda2), 0);
  EXPECT_EQ((c(q(1, 2)) * l1() - c(q(1, 3)) * l2()).primitive(), c(3) * l1() - c(2) * l2());
  EXPECT_TRUE((c(4) * l1()).proportional(c(q(-1, 3)) * l1()));
  EXPECT_FALSE((l1() + c(1)).proportional(l1()));
  const Rational v[] = {q(1, 2), q(3)};
  EXPECT_EQ((l1() * l2() + c(1)).evaluate(v), q(5, 2));
  EXPECT_EQ((l1() + l2()).substitute(kLambda2, l1()), c(2) * l1());
}

TEST(Constraints, TwoCycle) {
  const auto s = constraint_system(2);
  EXPECT_TRUE(contains(s, c(2048) * l1().pow(2) - c(256) * l1()));
  EXPECT_TRUE(contains(s, l2() - c(1)));
}

TEST(Constraints, ThreeCycle) {
  const auto s = constraint_system(3);
  EXPECT_TRUE(contains(s, c(32768) * l1().pow(2) - c(17 * 128) * l1() + c(26)));
  EXPECT_TRUE(contains(s, l1() - l2()));
}

TEST(Constraints, FourCycle) {
  const auto s = constraint_system(4);
  const Polynomial main = c(2048) * l1().pow(2) - c(32) * l1() + c(8) * l2() - c(1);
  EXPECT_TRUE(contains(s, main));
  EXPECT_TRUE(contains(s, c(2048) * l2().pow(2) - c(256) * l2()));
  // λ₂ = 0 factors the main equation as (2⁵λ₁ − 1)(2⁶λ₁ + 1).
  EXPECT_EQ(main.substitute(kLambda2, q(0)), (c(32) * l1() - c(1)) * (c(64) * l1() + c(1)));
}

TEST(Constraints, FiveAndSixCycles) {
  const auto five = constraint_system(5);
  EXPECT_TRUE(contains(five, c(256) * l1() - c(6)));
  EXPECT_TRUE(contains(five, c(32768) * l1().pow(2) - c(512) * l1() + c(128) * l2() - c(9)));
  const auto six = constraint_system(6);
  EXPECT_TRUE(contains(six, c(256) * l1() - c(5)));
  EXPECT_TRUE(contains(six, c(32768) * l1().pow(2) - c(512) * l1() + c(128) * l2() - c(9)));
}

TEST(Constraints, ProvenanceAndRange) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& e : constraint_system(n).equations) EXPECT_FALSE(e.provenance.empty()) << n;
  EXPECT_THROW(constraint_system(0), std::invalid_argument);
  EXPECT_THROW(constraint_system(7), std::invalid_argument);
}

TEST(Constraints, ClassRowsAreZeros) {
  for (const auto& row : classify_all()) {
    const Rational v[] = {q(4) * row.ef, q(4) * row.e_etf};
    for (const auto& e : constraint_system(row.n).equations) EXPECT_EQ(e.poly.evaluate(v), q(0)) << row.label;
  }
}

TEST(Solve, Examples) {
  const auto three = solve_parameters(3);
  ASSERT_EQ(three.size(), 2u);
  EXPECT_EQ(three[0].ef, q(13, 1024));
  EXPECT_EQ(three[0].label, "3A");
  EXPECT_EQ(three[1].ef, q(1, 256));
  EXPECT_EQ(three[1].label, "3C");

  const auto four = solve_parameters(4);
  ASSERT_EQ(four.size(), 2u);
  EXPECT_EQ(std::make_pair(four[0].ef, four[0].e_etf), std::make_pair(q(1, 128), q(0)));
  EXPECT_EQ(std::make_pair(four[1].ef, four[1].e_etf), std::make_pair(q(1, 256), q(1, 32)));

  const auto five = solve_parameters(5);
  ASSERT_EQ(five.size(), 1u);
  EXPECT_EQ(five[0].ef, q(3, 512));
  EXPECT_EQ(five[0].e_etf, q(3, 512));

  const auto six = solve_parameters(6);
  ASSERT_EQ(six.size(), 1u);
  EXPECT_EQ(six[0].ef, q(5, 1024));
  EXPECT_EQ(six[0].e_etf, q(13, 1024));
  ASSERT_TRUE(six[0].extra.has_value());
  EXPECT_EQ(*six[0].extra, q(1, 32));
}

TEST(Solve, FourCycleRejectionsCarryReasons) {
  const auto d = solve_parameters_detailed(4);
  ASSERT_EQ(d.rejected.size(), 2u);
  for (const auto& r : d.rejected) EXPECT_FALSE(r.reason.empty());
  EXPECT_FALSE(d.irrational_roots);
}

TEST(Solve, LabelsMatchClassColumns) {
  const auto rows = classify_all();
  ASSERT_EQ(rows.size(), 9u);
  ASSERT_EQ(class_columns().size(), 9u);
  for (const auto& col : class_columns()) {
    const auto it = std::find_if(rows.begin(), rows.end(), [&](const ClassRow& r) { return r.label == col.label; });
    ASSERT_NE(it, rows.end()) << col.label;
    EXPECT_EQ(it->ef, col.ef) << col.label;
  }
  EXPECT_EQ(class_label(4, q(1, 256), q(1, 32)), "4B");
  EXPECT_EQ(class_label(4, q(1, 256), q(0)), "unknown");
  EXPECT_TRUE(std::is_sorted(rows.begin(), rows.end(), [](const ClassRow& a, const ClassRow& b) {
    return a.n != b.n ? a.n < b.n : a.ef > b.ef;
  }));
}

TEST(Solve, RoundTripThroughEngine) {
  for (const auto& row : classify_all()) {
    const DihedralAlgebra alg = build_algebra(row.n, ParamRecord::from_bracket(row.ef, row.e_etf));
    EXPECT_TRUE(verify_axioms(alg).all_passed()) << row.label;
    EXPECT_EQ(alg.gram_table.mu_at(1), row.ef) << row.label;
    EXPECT_EQ(alg.gram_table.mu_at(2), row.e_etf) << row.label;
    if (row.extra) {
      EXPECT_EQ(alg.gram_table.mu_at(3), *row.extra) << row.label;
    }
  }
}

TEST(Independence, DiagonalCase) {
  const std::vector<Rational> zeros(6, q(0));
  const MuMatrix m = independence_certificate(zeros);
  EXPECT_EQ(m.A, Matrix::identity(3));
  EXPECT_EQ(m.det, q(1));
  EXPECT_EQ(m.verdict, Verdict::positive);
}

TEST(Independence, EvenThirds) {
  const Rational t = q(1, 3);
  const std::vector<Rational> lam{q(1, 5), t, q(1, 7), t, q(0), t};
  const MuMatrix m = independence_certificate(lam);
  EXPECT_EQ(m.A(0, 2), q(0));
  const Rational m12 = m.A(0, 1), m23 = m.A(1, 2);
  EXPECT_EQ(m.m1, q(8, 27) - q(2, 3) * (m12 * m12 + m23 * m23));
  EXPECT_GT(m.m1, q(0));
  EXPECT_EQ(m.m2, q(0));
  EXPECT_EQ(m.verdict, Verdict::positive);
}

TEST(Independence, SymmetricAndSumsToDeterminant) {
  const std::vector<Rational> lam{q(1, 4), q(1, 9), q(1, 3), q(0), q(2, 7), q(1, 11)};
  const MuMatrix m = independence_certificate(lam);
  EXPECT_TRUE(m.A.is_symmetric());
  EXPECT_EQ(m.m1 + m.m2, m.det);
  EXPECT_EQ(m.det, determinant(m.A));
  // μ_{j,k} = λ_{k−j} − λ_{k+j} with λ_{−m} = λ_m, so j ↦ −j leaves A unchanged.
  for (int j = 1; j <= 3; ++j)
    for (int k = 1; k <= 3; ++k) EXPECT_EQ(mu_entry(m.lambda_seq, -j, -k), mu_entry(m.lambda_seq, j, k));
  EXPECT_EQ(m.A(0, 0), q(1) - q(1, 9));
  EXPECT_EQ(m.A(0, 1), q(1, 4) - q(1, 3));
}

TEST(Independence, BoundViolationsThrow) {
  std::vector<Rational> lam(6, q(0));
  lam[3] = q(1, 2);
  EXPECT_THROW(independence_certificate(lam), std::invalid_argument);
  lam[3] = q(-1, 9);
  EXPECT_THROW(independence_certificate(lam), std::invalid_argument);
  EXPECT_THROW(independence_certificate(std::vector<Rational>(5, q(0))), std::invalid_argument);
}

TEST(Independence, RegroupingIsAnIdentity) {
  const Polynomial r = regrouping_residual();
  EXPECT_TRUE(r.is_zero()) << r.str(mu_names());
  // Coefficient-by-coefficient: M₂ as printed expands to det A − M₁.
  const Polynomial lhs = m1_polynomial() + m2_regrouped_polynomial();
  const Polynomial det = det_polynomial();
  EXPECT_EQ(lhs.terms().size(), det.terms().size());
  for (const auto& [mono, coef] : det.terms()) EXPECT_EQ(lhs.coeff(mono), coef);
  EXPECT_EQ(det.terms().size(), 5u);
}

TEST(Scan, FareyGrid) {
  EXPECT_EQ(farey_values(2, q(0), q(1, 3)), (std::vector<Rational>{q(0)}));
  EXPECT_EQ(farey_values(4, q(0), q(1, 3)), (std::vector<Rational>{q(0), q(1, 4), q(1, 3)}));
  EXPECT_EQ(farey_values(3, q(0), q(1)).size(), 5u);
}

TEST(Scan, TinyGrid) {
  const ScanReport r = infeasibility_scan(2, 1);
  EXPECT_EQ(r.candidates, 1u);
  EXPECT_EQ(r.filtered, 728u);
  EXPECT_EQ(r.violations, 0u);
  EXPECT_EQ(r.min_det, q(1));
}

TEST(Scan, SyntheticOutOfBoundsIsFiltered) {
  std::vector<Rational> lam(6, q(0));
  EXPECT_TRUE(scan_candidate(lam).has_value());
  lam[0] = q(1, 2);
  EXPECT_FALSE(scan_candidate(lam).has_value());
}

TEST(Scan, ScaledKernelMatchesRationalOracle) {
  const int bound = 4;
  const auto grid = farey_values(bound, q(0), q(1, 3));
  std::uint64_t count = 0, bad = 0;
  Rational min_det(100), min_m1(100), min_m2(100);
  std::vector<std::size_t> idx(6, 0);
  for (;;) {
    std::vector<Rational> lam;
    for (auto i : idx) lam.push_back(grid[i]);
    const MuMatrix m = independence_certificate(lam);
    ++count;
    if (m.det.sign() <= 0) ++bad;
    min_det = std::min(min_det, m.det);
    min_m1 = std::min(min_m1, m.m1);
    min_m2 = std::min(min_m2, m.m2);
    std::size_t k = 0;
    while (k < 6 && ++idx[k] == grid.size()) idx[k++] = 0;
    if (k == 6) break;
  }
  const ScanReport r = infeasibility_scan(bound, 1);
  EXPECT_EQ(r.candidates, count);
  EXPECT_EQ(r.violations, bad);
  EXPECT_EQ(r.min_det, min_det);
  EXPECT_EQ(r.min_m1, min_m1);
  EXPECT_EQ(r.min_m2, min_m2);
  EXPECT_EQ(r.crosscheck_failures, 0u);
}

TEST(Scan, WorkerCountDoesNotChangeTheReport) {
  EXPECT_EQ(to_json(infeasibility_scan(7, 1)).dump(), to_json(infeasibility_scan(7, 3)).dump());
}

TEST(Scan, RangeChecks) {
  EXPECT_THROW(infeasibility_scan(1), std::invalid_argument);
  EXPECT_THROW(infeasibility_scan(29), std::invalid_argument);
}

}  // namespace
}  // namespace isingpair
