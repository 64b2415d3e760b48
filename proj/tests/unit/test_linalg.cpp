#include <gtest/gtest.h>

#include <random>

#include "isingpair/linalg/matrix.hpp"
#include "isingpair/linalg/psd.hpp"
#include "isingpair/linalg/quadratic.hpp"
#include "isingpair/linalg/solve.hpp"

namespace isingpair {
namespace {

Rational q(std::int64_t p, std::int64_t d = 1) { return Rational(p, d); }

TEST(Rational, LowestTermsAndSign) {
  EXPECT_EQ(Rational::parse("6/8").str(), "3/4");
  EXPECT_EQ(Rational::parse("-4/8").str(), "-1/2");
  EXPECT_EQ(Rational(3, -9).str(), "-1/3");
  EXPECT_EQ(Rational::parse("12").str(), "12");
  EXPECT_EQ(Rational::parse("0/5").str(), "0");
  EXPECT_EQ(Rational(4, 2).denominator(), "1");
}

TEST(Rational, ParseRejectsMalformed) {
  for (const char* bad : {"", "1/0", "a", " 1", "1/", "/2", "1.5", "1/2/3", "--1"})
    EXPECT_THROW(Rational::parse(bad), std::invalid_argument) << bad;
}

TEST(Rational, PowersOfTwo) {
  EXPECT_EQ(Rational::pow2(10), q(1024));
  EXPECT_EQ(Rational::pow2(-8), q(1, 256));
  EXPECT_EQ(Rational::pow2(0), q(1));
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(q(13, 1024) * q(4), q(13, 256));
  EXPECT_EQ(q(1, 16) - q(13, 1024) * q(13, 1024), q(65367, 1048576));
  EXPECT_EQ(q(-2, 3).inverse(), q(-3, 2));
  EXPECT_EQ(q(-2, 3).abs(), q(2, 3));
  EXPECT_EQ(q(2, 3).pow(-2), q(9, 4));
  EXPECT_LT(q(1, 256), q(1, 128));
  EXPECT_THROW(q(0).inverse(), std::domain_error);
}

TEST(Rational, ExactSquareRoot) {
  bool ok = false;
  EXPECT_EQ(q(169, 1024).sqrt_exact(ok), q(13, 32));
  EXPECT_TRUE(ok);
  q(2).sqrt_exact(ok);
  EXPECT_FALSE(ok);
  q(-4).sqrt_exact(ok);
  EXPECT_FALSE(ok);
}

TEST(SolveLinear, IdentityTwoByTwo) {
  const auto s = solve_linear(Matrix::identity(2), Vector{q(1, 2), q(1, 16)});
  ASSERT_TRUE(s.consistent);
  EXPECT_EQ(s.particular, (Vector{q(1, 2), q(1, 16)}));
  EXPECT_TRUE(s.free_cols.empty());
}

TEST(SolveLinear, ZeroRowAgainstNonzeroRhsIsInconsistent) {
  const auto s = solve_linear(Matrix{{q(2), q(0)}, {q(0), q(0)}}, Vector{q(1), q(1)});
  EXPECT_FALSE(s.consistent);
}

TEST(SolveLinear, RankOneHasOneFreeParameter) {
  const Matrix a{{q(1), q(1)}, {q(2), q(2)}};
  const auto s = solve_linear(a, Vector{q(3), q(6)});
  ASSERT_TRUE(s.consistent);
  EXPECT_EQ(s.particular, (Vector{q(3), q(0)}));
  ASSERT_EQ(s.free_cols, (std::vector<std::size_t>{1}));
  ASSERT_EQ(s.directions.size(), 1u);
  EXPECT_EQ(a * s.directions[0], (Vector{q(0), q(0)}));
}

TEST(SolveLinear, DimensionMismatchThrows) {
  EXPECT_THROW(solve_linear(Matrix::identity(2), Vector{q(1)}), std::invalid_argument);
}

TEST(SolveLinear, RandomConsistentSystemsSatisfyAx) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> v(-5, 5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + trial % 4, cols = 1 + (trial / 4) % 4;
    Matrix a(rows, cols);
    Vector x(cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) a(i, j) = Rational(v(rng), 1 + (v(rng) + 5) % 3);
    for (auto& xi : x) xi = Rational(v(rng), 7);
    const Vector b = a * x;
    const auto s = solve_linear(a, b);
    ASSERT_TRUE(s.consistent);
    EXPECT_EQ(a * s.particular, b);
    for (const auto& d : s.directions) EXPECT_EQ(a * d, Vector(rows));
    EXPECT_EQ(s.free_cols.size(), cols - rank(a));
  }
}

TEST(Echelon, RankDeterminantKernelInverse) {
  const Matrix a{{q(1), q(2), q(3)}, {q(4), q(5), q(6)}, {q(7), q(8), q(10)}};
  EXPECT_EQ(rank(a), 3u);
  EXPECT_EQ(determinant(a), q(-3));
  const auto inv = inverse(a);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(a * *inv, Matrix::identity(3));

  const Matrix s{{q(1), q(2), q(3)}, {q(2), q(4), q(6)}, {q(1), q(0), q(1)}};
  EXPECT_EQ(rank(s), 2u);
  EXPECT_EQ(determinant(s), q(0));
  EXPECT_FALSE(inverse(s).has_value());
  const auto ker = kernel(s);
  ASSERT_EQ(ker.size(), 1u);
  EXPECT_EQ(s * ker[0], Vector(3));
  EXPECT_EQ(rref(s).pivot_cols, (std::vector<std::size_t>{0, 1}));
}

TEST(Psd, ScaledIdentity) {
  const auto c = psd_certificate(Matrix::identity(2).scaled(q(1, 4)));
  EXPECT_EQ(c.rank, 2u);
  EXPECT_TRUE(c.is_psd);
  EXPECT_TRUE(c.is_pd);
  EXPECT_FALSE(c.witness.has_value());
}

TEST(Psd, RepeatedVectorGram) {
  const auto c = psd_certificate(Matrix{{q(1, 4), q(1, 4)}, {q(1, 4), q(1, 4)}});
  EXPECT_EQ(c.rank, 1u);
  EXPECT_TRUE(c.is_psd);
  EXPECT_FALSE(c.is_pd);
}

TEST(Psd, TwoAxesAt3AInnerProduct) {
  const Rational ef = q(13, 1024);
  const Matrix g{{q(1, 4), ef}, {ef, q(1, 4)}};
  // Hand oracle: 1/16 − (13/1024)² = 65367/1048576.
  EXPECT_EQ(determinant(g), q(65367, 1048576));
  const auto c = psd_certificate(g);
  EXPECT_EQ(c.rank, 2u);
  EXPECT_TRUE(c.is_pd);
}

TEST(Psd, IndefiniteGivesNegativeWitness) {
  const Matrix g{{q(1), q(2)}, {q(2), q(1)}};
  const auto c = psd_certificate(g);
  EXPECT_FALSE(c.is_psd);
  ASSERT_TRUE(c.witness.has_value());
  EXPECT_LT(bilinear(g, *c.witness, *c.witness), q(0));

  const Matrix zero_diag{{q(0), q(1)}, {q(1), q(0)}};
  const auto z = psd_certificate(zero_diag);
  EXPECT_FALSE(z.is_psd);
  ASSERT_TRUE(z.witness.has_value());
  EXPECT_LT(bilinear(zero_diag, *z.witness, *z.witness), q(0));
}

TEST(Psd, NonSymmetricThrows) {
  EXPECT_THROW(psd_certificate(Matrix{{q(1), q(2)}, {q(0), q(1)}}), std::invalid_argument);
}

TEST(Psd, RandomGramMatricesAndMinors) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> v(-4, 4);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + trial % 5, k = 1 + (trial / 5) % 5;
    Matrix b(k, n);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < n; ++j) b(i, j) = Rational(v(rng), 2);
    const Matrix g = b.transpose() * b;
    const auto c = psd_certificate(g);
    EXPECT_TRUE(c.is_psd);
    EXPECT_EQ(c.rank, rank(g));
    if (c.is_pd) {
      for (std::size_t m = 1; m <= n; ++m) {
        std::vector<std::size_t> idx(m);
        for (std::size_t i = 0; i < m; ++i) idx[i] = i;
        EXPECT_GT(determinant(g.principal(idx)), q(0));
      }
    }
    // Shifting by −I makes most of these indefinite; any failure must carry a witness.
    const Matrix h = g - Matrix::identity(n);
    const auto d = psd_certificate(h);
    if (!d.is_psd) {
      ASSERT_TRUE(d.witness.has_value());
      EXPECT_LT(bilinear(h, *d.witness, *d.witness), q(0));
    }
  }
}

TEST(Quadratic, ThreeAClassPolynomial) {
  const auto r = solve_quadratic(Rational::pow2(15), q(-17 * 128), q(26));
  EXPECT_EQ(r.roots, (std::vector<Rational>{q(1, 64), q(13, 256)}));
  EXPECT_FALSE(r.irrational);
}

TEST(Quadratic, TwoClassPolynomial) {
  const auto r = solve_quadratic(Rational::pow2(11), -Rational::pow2(8), q(0));
  EXPECT_EQ(r.roots, (std::vector<Rational>{q(0), q(1, 8)}));
}

TEST(Quadratic, IrrationalAndDegenerateCases) {
  const auto r = solve_quadratic(q(1), q(0), q(-2));
  EXPECT_TRUE(r.roots.empty());
  EXPECT_TRUE(r.irrational);
  EXPECT_TRUE(solve_quadratic(q(1), q(0), q(1)).roots.empty());
  EXPECT_FALSE(solve_quadratic(q(1), q(0), q(1)).irrational);
  EXPECT_EQ(solve_quadratic(q(0), q(3), q(-1)).roots, (std::vector<Rational>{q(1, 3)}));
  EXPECT_EQ(solve_quadratic(q(4), q(-4), q(1)).roots, (std::vector<Rational>{q(1, 2)}));
  EXPECT_THROW(solve_quadratic(q(0), q(0), q(0)), std::invalid_argument);
}

TEST(Quadratic, RootsFactorTheInput) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> v(-20, 20);
  for (int trial = 0; trial < 300; ++trial) {
    const Rational lead(v(rng) == 0 ? 1 : v(rng) | 1, 1);
    const Rational r1(v(rng), 1 + (v(rng) + 20) % 9), r2(v(rng), 1 + (v(rng) + 20) % 7);
    const Rational a = lead, b = -lead * (r1 + r2), c = lead * r1 * r2;
    const auto got = solve_quadratic(a, b, c);
    for (const auto& r : got.roots) EXPECT_EQ(a * r * r + b * r + c, q(0));
    if (got.roots.size() == 2) {
      EXPECT_EQ(got.roots[0] + got.roots[1], -b / a);
      EXPECT_EQ(got.roots[0] * got.roots[1], c / a);
    } else {
      ASSERT_EQ(got.roots.size(), 1u);
      EXPECT_EQ(r1, r2);
    }
  }
}

}  // namespace
}  // namespace isingpair
