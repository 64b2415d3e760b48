#include <gtest/gtest.h>

#include "isingpair/engine/serialize.hpp"
#include "isingpair/engine/verify.hpp"
#include "isingpair/linalg/psd.hpp"
#include "isingpair/model/errors.hpp"
#include "rows.hpp"

namespace isingpair {
namespace {

using testing::admissible_rows;
using testing::algebra_for;

Rational q(std::int64_t p, std::int64_t d = 1) { return Rational(p, d); }

std::size_t row_index(const std::string& label) {
  for (std::size_t i = 0; i < admissible_rows().size(); ++i)
    if (admissible_rows()[i].label == label) return i;
  throw std::out_of_range(label);
}

// Oracle for α(a_p, a_q) written straight from the definitions: distance 0
// gives (15/8)a_p, distance 1 is α₁, (−1, 1) is α₂, and (0, −2) comes from
// solving the e−f relation for α(f, f^{τ_e}).
Element alpha_oracle(const DihedralAlgebra& alg, int p, int q_) {
  const auto& m = alg.orbit;
  const int d = m.distance(p, q_);
  if (d == 0) return Rational(15, 8) * alg.axis(p);
  if (d == 1) return alg.label(*alg.basis.alpha1());
  if (m.mod(p) == m.mod(-1) && m.mod(q_) == m.mod(1)) return alg.label(*alg.basis.alpha2());
  if (m.mod(p) == 0 && m.mod(q_) == m.mod(-2)) {
    const Rational l1 = alg.params.lambda1, l2 = alg.params.lambda2;
    const Rational c1 = q(1, 7) * (q(2048) * l1 * l1 - q(144) * l1 + q(33, 16) + q(8) * l2);
    const Rational c2 = q(16) * l1 - q(3, 8);
    Element out = alg.label(*alg.basis.alpha2());
    out.axpy(-c1, alg.axis(-1) - alg.axis(0));
    out.axpy(-c2, alg.axis(-2) - alg.axis(1));
    out.axpy(q(-1, 16), alg.axis(-3) - alg.axis(2));
    return out;
  }
  throw std::logic_error("alpha_oracle: unsupported pair");
}

Element phi_plus_oracle(const DihedralAlgebra& alg, int a, int x) {
  return q(1, 2) * (alg.axis(x) + alg.axis(2 * a - x));
}

// φ_a¹(a_x) = 2α(a,x) − (4(a|x) − 1/8)a + (1/8)φ_a⁺(x).
Element phi_one_oracle(const DihedralAlgebra& alg, int a, int x) {
  const Rational lam = q(4) * alg.gram_table.mu_at(alg.orbit.distance(a, x));
  Element out = q(2) * alpha_oracle(alg, a, x);
  out.axpy(-(q(4) * lam - q(1, 8)), alg.axis(a));
  out.axpy(q(1, 8), phi_plus_oracle(alg, a, x));
  return out;
}

TEST(AlphaOf, Definitions) {
  for (std::size_t row = 1; row < admissible_rows().size(); ++row) {
    const auto& alg = algebra_for(row);
    const Element a1 = alg.label(*alg.basis.alpha1());
    EXPECT_EQ(alpha_of(alg, -1, alg.axis(-1)), q(15, 8) * alg.axis(-1));
    EXPECT_TRUE(alg.congruent(alpha_of(alg, -1, alg.axis(0)), a1)) << admissible_rows()[row].label;
    EXPECT_TRUE(alg.congruent(alpha_of(alg, 0, alg.axis(-1)), a1)) << admissible_rows()[row].label;
  }
  const auto& one = algebra_for(row_index("1A"));
  EXPECT_EQ(alpha_of(one, 0, one.axis(0)), q(15, 8) * one.axis(0));
}

TEST(ProjectChannel, Examples) {
  for (std::size_t row = 1; row < admissible_rows().size(); ++row) {
    const auto& alg = algebra_for(row);
    const std::string label = admissible_rows()[row].label;
    EXPECT_TRUE(project_channel(alg, -1, alg.axis(-1), Channel::minus).is_zero()) << label;
    EXPECT_TRUE(alg.congruent(project_channel(alg, 0, alg.axis(-1), Channel::minus),
                              q(1, 2) * (alg.axis(-1) - alg.axis(1))))
        << label;
    // φ_e¹(f) = 2α₁ − (4λ₁ − 1/8)e + (1/8)φ_e⁺(f)
    EXPECT_TRUE(alg.congruent(project_channel(alg, -1, alg.axis(0), Channel::one), phi_one_oracle(alg, -1, 0)))
        << label;
  }
}

TEST(ProjectChannel, ParseChannel) {
  EXPECT_EQ(parse_channel("+"), Channel::plus);
  EXPECT_EQ(parse_channel("-"), Channel::minus);
  EXPECT_EQ(parse_channel("0"), Channel::zero);
  EXPECT_EQ(parse_channel("1"), Channel::one);
  EXPECT_THROW(parse_channel(""), std::invalid_argument);
  EXPECT_THROW(parse_channel("1/2"), std::invalid_argument);
}

TEST(AxisProduct, AxisTimesOwnAlpha) {
  for (std::size_t row = 1; row < admissible_rows().size(); ++row) {
    const auto& alg = algebra_for(row);
    const Rational l1 = alg.params.lambda1;
    Element expect = q(7, 16) * alg.label(*alg.basis.alpha1());
    expect.axpy(q(3) * l1 - q(25, 256), alg.axis(-1));
    expect.axpy(q(7, 512), alg.axis(0) + alg.axis(-2));
    EXPECT_TRUE(alg.congruent(axis_product(alg, -1, alg.label(*alg.basis.alpha1())), expect))
        << admissible_rows()[row].label;
  }
}

TEST(AxisProduct, SixAExplicit) {
  const auto& alg = algebra_for(row_index("6A"));
  Element expect = q(7, 16) * alg.label(6);
  expect.add(5, q(-5, 128));
  expect.add(0, q(7, 512));
  expect.add(4, q(7, 512));
  EXPECT_EQ(axis_product(alg, 5, alg.label(6)), expect);
}

TEST(AxisProduct, AxisPairIsAlphaPlusSixteenths) {
  for (std::size_t row = 1; row < admissible_rows().size(); ++row) {
    const auto& alg = algebra_for(row);
    Element expect = alg.label(*alg.basis.alpha1());
    expect.axpy(q(1, 16), alg.axis(-1) + alg.axis(0));
    EXPECT_TRUE(alg.congruent(axis_product(alg, -1, alg.axis(0)), expect));
    EXPECT_EQ(axis_product(alg, 2, alg.axis(2)), q(2) * alg.axis(2));
  }
}

TEST(AxisProduct, AxisTimesMidpointAlpha) {
  // e·α(f,f^{τ_e}) = 8⟨e,α(f,f^{τ_e})⟩e + (8/3)φ_e¹((4λ₁ − 19/2⁷)f + (7/2⁸)e^{τ_f}),
  // with ⟨e,α(f,f^{τ_e})⟩ = (15/8)⟨e,f⟩ − (1/16)(1/4 − ⟨f,f^{τ_e}⟩).
  for (std::size_t row = 2; row < admissible_rows().size(); ++row) {
    const auto& alg = algebra_for(row);
    const std::string label = admissible_rows()[row].label;
    const Rational l1 = alg.params.lambda1;
    const Rational t = q(15, 8) * alg.gram_table.mu_at(1) - q(1, 16) * (q(1, 4) - alg.gram_table.mu_at(2));
    Element expect = q(8) * t * alg.axis(-1);
    expect.axpy(q(8, 3) * (q(4) * l1 - q(19, 128)), phi_one_oracle(alg, -1, 0));
    expect.axpy(q(8, 3) * q(7, 256), phi_one_oracle(alg, -1, 1));

    const Element mid = alg.n >= 4 ? alpha_oracle(alg, 0, -2) : alpha_of(alg, 0, alg.axis(-2));
    EXPECT_EQ(alg.inner(alg.axis(-1), mid), t) << label;
    EXPECT_TRUE(alg.congruent(axis_product(alg, -1, mid), expect)) << label;
  }
}

TEST(AlphaProduct, SquareOfAlphaEF) {
  for (std::size_t row = 1; row < admissible_rows().size(); ++row) {
    const auto& alg = algebra_for(row);
    const std::string label = admissible_rows()[row].label;
    const Rational l1 = alg.params.lambda1, l2 = alg.params.lambda2;
    Element expect = q(7, 3) * (q(4) * l1 * l1 - q(1, 16) * l1 - q(1, 4096) + q(1, 64) * l2) * alg.axis(-1);
    expect.axpy(q(49, 48) * (l1 - q(5, 256)), phi_plus_oracle(alg, -1, 0));
    expect.axpy(q(49, 3 * 4096), phi_plus_oracle(alg, -1, 1));
    expect.axpy(-q(1, 3) * (q(5) * l1 + q(13, 128)), alg.label(*alg.basis.alpha1()));
    const Element ee = alg.n >= 4 ? alpha_oracle(alg, -1, 1) : alpha_of(alg, -1, alg.axis(1));
    const Element ff = alg.n >= 4 ? alpha_oracle(alg, 0, -2) : alpha_of(alg, 0, alg.axis(-2));
    expect.axpy(q(-7, 3 * 128), ee);
    expect.axpy(q(7, 512), ff);
    EXPECT_TRUE(alg.congruent(alpha_product(alg, -1, 0, 0), expect)) << label;
  }
  // λ₁ = 1/8: the α₁ coefficient −(1/3)(5λ₁ + 13/2⁷) is −31/2⁷; 2A has no radical.
  const auto& two = algebra_for(row_index("2A"));
  EXPECT_EQ(alpha_product(two, -1, 0, 0).coeff(*two.basis.alpha1()), q(-31, 128));
}

TEST(AlphaProduct, AxisAlphaSquared) {
  for (std::size_t row = 0; row < admissible_rows().size(); ++row) {
    const auto& alg = algebra_for(row);
    EXPECT_EQ(alpha_product(alg, -1, -1, -1), q(225, 32) * alg.axis(-1));
  }
}

TEST(AlphaProduct, DoubleDerivationAgrees) {
  for (std::size_t row = 0; row < admissible_rows().size(); ++row) {
    const auto& alg = algebra_for(row);
    EXPECT_EQ(alg.canonical(alpha_product(alg, -1, 0, 0)), alg.canonical(alpha_product(alg, 0, -1, -1)))
        << admissible_rows()[row].label;
  }
}

TEST(Build, ThreeARankFour) {
  const auto& alg = algebra_for(row_index("3A"));
  EXPECT_EQ(alg.rank, 4u);
  EXPECT_TRUE(alg.radical.empty());
  const auto cert = psd_certificate(alg.gram);
  EXPECT_TRUE(cert.is_pd);
  EXPECT_TRUE(verify_axioms(alg).all_passed());
}

TEST(Build, TwoBProductVanishes) {
  const auto& alg = algebra_for(row_index("2B"));
  EXPECT_EQ(alg.rank, 2u);
  EXPECT_TRUE(alg.congruent(alg.product(alg.axis(-1), alg.axis(0)), Element(alg.dim())));
  EXPECT_TRUE(alg.in_radical(alg.label(*alg.basis.alpha1()) + q(1, 16) * (alg.axis(0) + alg.axis(1))));
}

TEST(Build, SixARotationOrder) {
  const auto& alg = algebra_for(row_index("6A"));
  EXPECT_LE(alg.rank, 8u);
  const Matrix rho = alg.tau_e * alg.tau_f;
  Matrix p = Matrix::identity(alg.dim());
  for (int i = 0; i < 6; ++i) p = rho * p;
  EXPECT_EQ(p, Matrix::identity(alg.dim()));
  EXPECT_EQ(alg.tau_e * alg.tau_e, Matrix::identity(alg.dim()));
  EXPECT_EQ(alg.tau_f * alg.tau_f, Matrix::identity(alg.dim()));
}

TEST(Build, RanksOfAllRows) {
  const std::map<std::string, std::size_t> ranks{{"1A", 1}, {"2A", 3}, {"2B", 2}, {"3A", 4}, {"3C", 3},
                                                 {"4A", 5}, {"4B", 5}, {"5A", 6}, {"6A", 8}};
  for (std::size_t row = 0; row < admissible_rows().size(); ++row)
    EXPECT_EQ(algebra_for(row).rank, ranks.at(admissible_rows()[row].label)) << admissible_rows()[row].label;
}

TEST(Build, InconsistentParametersAreRejected) {
  const std::vector<std::tuple<int, Rational, Rational>> bad{
      {3, q(1, 5), q(1, 5)}, {3, q(1, 20), q(1, 20)}, {5, q(1, 64), q(1, 64)}, {6, q(1, 64), q(1, 32)},
      {4, q(1, 16), q(0)},   {2, q(1, 4), q(1)}};
  for (const auto& [n, l1, l2] : bad) {
    try {
      build_algebra(n, ParamRecord::make(l1, l2));
      ADD_FAILURE() << n << " " << l1.str() << " " << l2.str();
    } catch (const AlgebraError& e) {
      EXPECT_EQ(e.code(), ErrorCode::inconsistent_parameters);
      EXPECT_NE(std::string(e.what()).find("inconsistent-parameters"), std::string::npos);
    }
  }
  EXPECT_THROW(build_algebra(7, ParamRecord::make(q(0), q(0))), std::invalid_argument);
  EXPECT_THROW(build_algebra(0, ParamRecord::make(q(0), q(0))), std::invalid_argument);
}

TEST(Verify, AllRowsPass) {
  for (std::size_t row = 0; row < admissible_rows().size(); ++row) {
    const AxiomReport r = verify_axioms(algebra_for(row));
    ASSERT_EQ(r.checks.size(), std::size(kCheckNames));
    for (const auto& c : r.checks) EXPECT_TRUE(c.passed) << admissible_rows()[row].label << " " << c.name << ": " << c.detail;
  }
}

TEST(Verify, DegenerateSingleAxis) {
  const auto& alg = algebra_for(row_index("1A"));
  EXPECT_EQ(alg.dim(), 1u);
  EXPECT_EQ(alg.gram(0, 0), q(1, 4));
  EXPECT_TRUE(verify_axioms(alg).all_passed());
}

TEST(Verify, CorruptedConstantBreaksInvariance) {
  DihedralAlgebra alg = algebra_for(row_index("3A"));
  alg.table[0][1].add(3, q(1, 1024));
  alg.table[1][0].add(3, q(1, 1024));
  const AxiomReport r = verify_axioms(alg);
  EXPECT_FALSE(r.all_passed());
  ASSERT_NE(r.find("invariance"), nullptr);
  EXPECT_FALSE(r.find("invariance")->passed);
  EXPECT_TRUE(r.find("commutativity")->passed);

  DihedralAlgebra one_sided = algebra_for(row_index("3A"));
  one_sided.table[0][1].add(0, q(1, 2));
  EXPECT_FALSE(verify_axioms(one_sided).find("commutativity")->passed);
}

TEST(Verify, SpectrumProjectorsDecomposeIdentity) {
  for (std::size_t row = 0; row < admissible_rows().size(); ++row) {
    const auto& alg = algebra_for(row);
    const AxisSpectrum s = axis_spectrum(alg, -1);
    EXPECT_EQ(s.p2 + s.p0 + s.p_half + s.p_sixteenth, Matrix::identity(alg.rank));
    EXPECT_EQ(s.p2 * s.p2, s.p2);
  }
}

TEST(Serialize, JsonShape) {
  const auto& alg = algebra_for(row_index("6A"));
  const auto j = to_json(alg);
  EXPECT_EQ(j.at("n"), 6);
  EXPECT_EQ(j.at("rank"), 8);
  EXPECT_EQ(j.at("params").at("lambda1"), "5/256");
  EXPECT_EQ(j.at("params").at("ef"), "5/1024");
  EXPECT_EQ(j.at("params").at("e_etf"), "13/1024");
  EXPECT_EQ(j.at("basis").size(), 8u);
  EXPECT_EQ(j.at("basis").back(), "alpha2");
  EXPECT_EQ(j.at("gram").size(), 8u);
  EXPECT_EQ(j.at("gram")[0][0], "1/4");
  EXPECT_EQ(j.at("table").at("a0").at("a0").at("a0"), "2");
  EXPECT_EQ(j.at("tau_f")[1][5], "1");  // row 1 is the image of a1, which is a5
  EXPECT_EQ(j.at("orbit").at("tau_e")[0], 4);
  EXPECT_EQ(to_json(alg).dump(), j.dump());
}

TEST(Serialize, Csv) {
  const std::string csv = to_csv(algebra_for(row_index("2A")));
  EXPECT_EQ(csv.rfind("x,y,label,coefficient\n", 0), 0u);
  EXPECT_NE(csv.find("a0,a0,a0,2\n"), std::string::npos);
  EXPECT_NE(csv.find("a0,a1,alpha1,1\n"), std::string::npos);
}

}  // namespace
}  // namespace isingpair
