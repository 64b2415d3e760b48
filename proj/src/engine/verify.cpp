#include "isingpair/engine/verify.hpp"

#include <sstream>

#include "isingpair/linalg/psd.hpp"
#include "isingpair/linalg/solve.hpp"

namespace isingpair {

bool AxiomReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

const CheckResult* AxiomReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

Element from_coords(const DihedralAlgebra& alg, const Vector& c) {
  Element out(alg.dim());
  for (std::size_t i = 0; i < alg.rank; ++i) out.add(alg.pivots[i], c[i]);
  return out;
}

Vector quotient_product(const DihedralAlgebra& alg, const Vector& u, const Vector& v) {
  return alg.coordinates(alg.product(from_coords(alg, u), from_coords(alg, v)));
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Matrix lagrange(const Matrix& ad, const Rational& mu) {
  const Rational roots[] = {Rational(2), Rational(0), Rational(1, 2), Rational(1, 16)};
  const std::size_t r = ad.rows();
  Matrix p = Matrix::identity(r);
  for (const auto& nu : roots) {
    if (nu == mu) continue;
    p = p * (ad - Matrix::identity(r).scaled(nu)).scaled((mu - nu).inverse());
  }
  return p;
}

std::vector<Vector> columns(const Matrix& m) {
  std::vector<Vector> out;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Vector v = m.column(c);
    if (!is_zero(v)) out.push_back(std::move(v));
  }
  return out;
}

std::string label_name(const DihedralAlgebra& alg, std::size_t i) { return alg.basis.name(i); }

}  // namespace

Matrix quotient_map(const DihedralAlgebra& alg, const Matrix& formal) {
  Matrix out(alg.rank, alg.rank);
  for (std::size_t i = 0; i < alg.rank; ++i) {
    const Element image = apply(formal, alg.label(alg.pivots[i]));
    out.set_column(i, alg.coordinates(image));
  }
  return out;
}

AxisSpectrum axis_spectrum(const DihedralAlgebra& alg, int j) {
  AxisSpectrum s;
  s.ad = Matrix(alg.rank, alg.rank);
  for (std::size_t i = 0; i < alg.rank; ++i)
    s.ad.set_column(i, alg.coordinates(axis_product(alg, j, alg.label(alg.pivots[i]))));
  s.p2 = lagrange(s.ad, Rational(2));
  s.p0 = lagrange(s.ad, Rational(0));
  s.p_half = lagrange(s.ad, Rational(1, 2));
  s.p_sixteenth = lagrange(s.ad, Rational(1, 16));
  return s;
}

AxiomReport verify_axioms(const DihedralAlgebra& alg) {
  AxiomReport report;
  const std::size_t d = alg.dim();
  const std::size_t r = alg.rank;
  const Matrix id = Matrix::identity(r);
  auto add = [&](const char* name, bool ok, std::string detail) {
    report.checks.push_back({name, ok, ok ? std::string() : std::move(detail)});
  };

  {
    std::string detail;
    for (std::size_t i = 0; i < d && detail.empty(); ++i)
      for (std::size_t k = i + 1; k < d && detail.empty(); ++k)
        if (alg.table[i][k] != alg.table[k][i]) detail = label_name(alg, i) + "*" + label_name(alg, k);
    add("commutativity", detail.empty(), detail);
  }
  {
    std::string detail;
    for (std::size_t x = 0; x < d && detail.empty(); ++x)
      for (std::size_t y = 0; y < d && detail.empty(); ++y)
        for (std::size_t z = 0; z < d && detail.empty(); ++z) {
          const Rational lhs = alg.inner(alg.table[x][y], alg.label(z));
          const Rational rhs = alg.inner(alg.label(x), alg.table[y][z]);
          if (lhs != rhs) {
            detail = "<" + label_name(alg, x) + "*" + label_name(alg, y) + ", " + label_name(alg, z) +
                     "> = " + lhs.str() + " but <" + label_name(alg, x) + ", " + label_name(alg, y) + "*" +
                     label_name(alg, z) + "> = " + rhs.str();
          }
        }
    add("invariance", detail.empty(), detail);
  }
  {
    std::string detail;
    for (int j = 0; j < alg.n && detail.empty(); ++j) {
      const Element a = alg.axis(j);
      if (alg.product(a, a) != alg.canonical(Rational(2) * a)) detail = "a" + std::to_string(j) + "^2 != 2a";
      if (alg.inner(a, a) != Rational(1, 4)) detail = "<a" + std::to_string(j) + ", a> != 1/4";
    }
    add("axis-idempotent", detail.empty(), detail);
  }

  std::vector<AxisSpectrum> spectra;
  for (int j = 0; j < alg.n; ++j) spectra.push_back(axis_spectrum(alg, j));

  bool polynomial_ok = true;
  {
    std::string detail;
    for (int j = 0; j < alg.n; ++j) {
      const Matrix& ad = spectra[static_cast<std::size_t>(j)].ad;
      const Matrix p = (ad - id.scaled(Rational(2))) * ad * (ad - id.scaled(Rational(1, 2))) *
                       (ad - id.scaled(Rational(1, 16)));
      if (!p.is_zero()) {
        polynomial_ok = false;
        detail = "ad_a" + std::to_string(j);
        break;
      }
    }
    add("adjoint-polynomial", polynomial_ok, detail);
  }
  {
    std::string detail;
    for (int j = 0; j < alg.n && detail.empty(); ++j) {
      const Matrix& ad = spectra[static_cast<std::size_t>(j)].ad;
      const std::size_t k = r - rank(ad - id.scaled(Rational(2)));
      if (k != 1) detail = "2-eigenspace of a" + std::to_string(j) + " has dimension " + std::to_string(k);
    }
    add("unique-2-eigenvector", detail.empty(), detail);
  }
  {
    std::string detail = polynomial_ok ? "" : "adjoint polynomial fails";
    for (int j = 0; j < alg.n && detail.empty(); ++j) {
      const Matrix tau = quotient_map(alg, alg.tau_axis(j));
      const Matrix expected = id - spectra[static_cast<std::size_t>(j)].p_sixteenth.scaled(Rational(2));
      if (tau != expected) detail = "tau_a" + std::to_string(j) + " != 1 - 2 P_{1/16}";
    }
    add("tau-eigenspaces", detail.empty(), detail);
  }
  {
    std::string detail;
    const Matrix gq = alg.gram.principal(alg.pivots);
    for (const Matrix* formal : {&alg.tau_e, &alg.tau_f}) {
      const Matrix t = quotient_map(alg, *formal);
      const char* name = formal == &alg.tau_e ? "tau_e" : "tau_f";
      if (t * t != id) {
        detail = std::string(name) + " does not square to 1";
        break;
      }
      if (t.transpose() * gq * t != gq) {
        detail = std::string(name) + " does not preserve the form";
        break;
      }
      for (std::size_t i = 0; i < r && detail.empty(); ++i)
        for (std::size_t k = i; k < r && detail.empty(); ++k) {
          const Vector ei = id.column(i);
          const Vector ek = id.column(k);
          const Vector lhs = t * quotient_product(alg, ei, ek);
          const Vector rhs = quotient_product(alg, t * ei, t * ek);
          if (lhs != rhs) {
            detail = std::string(name) + " does not respect " + label_name(alg, alg.pivots[i]) + "*" +
                     label_name(alg, alg.pivots[k]);
          }
        }
      if (!detail.empty()) break;
    }
    add("tau-automorphism", detail.empty(), detail);
  }
  {
    const Matrix rho = quotient_map(alg, alg.tau_e) * quotient_map(alg, alg.tau_f);
    Matrix power = id;
    for (int k = 0; k < alg.n; ++k) power = power * rho;
    add("rho-order", power == id, "(tau_e tau_f)^n != 1");
  }
  {
    std::string detail = polynomial_ok ? "" : "adjoint polynomial fails";
    for (int j = 0; j < alg.n && detail.empty(); ++j) {
      const AxisSpectrum& s = spectra[static_cast<std::size_t>(j)];
      const Matrix b0 = s.p2 + s.p0;
      const auto zero_part = columns(b0);
      const auto half = columns(s.p_half);
      const auto sixteenth = columns(s.p_sixteenth);
      struct Rule {
        const std::vector<Vector>* u;
        const std::vector<Vector>* v;
        Matrix allowed;
        const char* text;
      };
      const Rule rules[] = {
          {&zero_part, &zero_part, b0, "B(0)*B(0)"},
          {&zero_part, &half, s.p_half, "B(0)*E(1/2)"},
          {&zero_part, &sixteenth, s.p_sixteenth, "B(0)*E(1/16)"},
          {&half, &half, b0, "E(1/2)*E(1/2)"},
          {&half, &sixteenth, s.p_sixteenth, "E(1/2)*E(1/16)"},
          {&sixteenth, &sixteenth, b0 + s.p_half, "E(1/16)*E(1/16)"},
      };
      for (const auto& rule : rules) {
        const Matrix outside = id - rule.allowed;
        for (const auto& u : *rule.u) {
          for (const auto& v : *rule.v) {
            if (!is_zero(outside * quotient_product(alg, u, v))) {
              detail = std::string(rule.text) + " for a" + std::to_string(j);
              break;
            }
          }
          if (!detail.empty()) break;
        }
        if (!detail.empty()) break;
      }
    }
    add("fusion-rules", detail.empty(), detail);
  }
  {
    const PsdCertificate cert = psd_certificate(alg.gram);
    add("gram-psd", cert.is_psd, "Gram matrix has a negative direction");
  }
  add("rank-bound", r <= 8, "rank " + std::to_string(r) + " exceeds 8");
  return report;
}

}  // namespace isingpair
