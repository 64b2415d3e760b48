#include "isingpair/classify/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace isingpair {

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw std::out_of_range("Polynomial::variable");
  Monomial m(nvars, 0);
  m[i] = 1;
  Polynomial p(nvars);
  p.add_term(m, Rational(1));
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial(nvars_, 0));
}

Rational Polynomial::constant_term() const { return coeff(Monomial(nvars_, 0)); }

Rational Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::degree() const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [m, c] : terms_) {
    int s = 0;
    for (int e : m) s += e;
    d = std::max(d, s);
  }
  return d;
}

int Polynomial::degree_in(std::size_t var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

std::vector<std::size_t> Polynomial::variables() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < nvars_; ++v)
    if (degree_in(v) > 0) out.push_back(v);
  return out;
}

Polynomial Polynomial::coefficient(std::size_t var, int k) const {
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] != k) continue;
    Monomial r = m;
    r[var] = 0;
    out.add_term(r, c);
  }
  return out;
}

Polynomial Polynomial::substitute(std::size_t var, const Rational& value) const {
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_) {
    Monomial r = m;
    r[var] = 0;
    out.add_term(r, c * value.pow(m[var]));
  }
  return out;
}

Polynomial Polynomial::substitute(std::size_t var, const Polynomial& value) const {
  Polynomial out(nvars_);
  const int top = degree_in(var);
  for (int k = 0; k <= top; ++k) {
    const Polynomial c = coefficient(var, k);
    if (c.is_zero()) continue;
    out += c * value.pow(k);
  }
  return out;
}

Rational Polynomial::evaluate(std::span<const Rational> values) const {
  if (values.size() != nvars_) throw std::invalid_argument("Polynomial::evaluate: arity mismatch");
  Rational s;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t v = 0; v < nvars_; ++v)
      if (m[v] != 0) t *= values[v].pow(m[v]);
    s += t;
  }
  return s;
}

Polynomial Polynomial::primitive() const {
  if (terms_.empty()) return *this;
  mpz_class lcm_den = 1;
  for (const auto& [m, c] : terms_) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.raw().get_den_mpz_t());
  mpz_class content = 0;
  for (const auto& [m, c] : terms_) {
    mpz_class num = c.raw().get_num() * (lcm_den / c.raw().get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
  }
  Rational scale(mpq_class(lcm_den, content));
  if (terms_.rbegin()->second.sign() < 0) scale = -scale;
  return scale * *this;
}

bool Polynomial::proportional(const Polynomial& other) const {
  if (is_zero() || other.is_zero()) return is_zero() && other.is_zero();
  return primitive() == other.primitive();
}

Polynomial& Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.size() != nvars_) throw std::invalid_argument("Polynomial: monomial arity mismatch");
  if (c.is_zero()) return *this;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("Polynomial: arity mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("Polynomial: arity mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("Polynomial: arity mismatch");
  Polynomial out(a.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Polynomial::Monomial m = ma;
      for (std::size_t v = 0; v < m.size(); ++v) m[v] += mb[v];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

Polynomial operator*(const Rational& s, const Polynomial& a) {
  Polynomial out(a.nvars_);
  if (s.is_zero()) return out;
  for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, s * c);
  return out;
}

Polynomial Polynomial::pow(int k) const {
  if (k < 0) throw std::invalid_argument("Polynomial::pow: negative exponent");
  Polynomial out = constant(nvars_, Rational(1));
  for (int i = 0; i < k; ++i) out = out * *this;
  return out;
}

std::string Polynomial::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = true;
    for (int e : m) unit = unit && e == 0;
    if (unit || mag != Rational(1)) {
      os << mag.str();
      if (!unit) os << "*";
    }
    bool sep = false;
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      if (sep) os << "*";
      os << names.at(v);
      if (m[v] > 1) os << "^" << m[v];
      sep = true;
    }
  }
  return os.str();
}

}  // namespace isingpair
