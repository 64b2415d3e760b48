#include "isingpair/linalg/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace isingpair {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s, bool allow_sign) {
  bool negative = false;
  if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!is_digits(s)) {
    throw std::invalid_argument("malformed rational component");
  }
  mpz_class z(std::string(s), 10);
  return negative ? mpz_class(-z) : z;
}

}  // namespace

static_assert(sizeof(long) == sizeof(std::int64_t), "mpz_class(long) must hold int64");

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(mpq_class(parse_integer(text, true)));
  }
  mpz_class num = parse_integer(text.substr(0, slash), true);
  mpz_class den = parse_integer(text.substr(slash + 1), false);
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Rational(mpq_class(num, den));
}

Rational Rational::pow2(int k) {
  mpz_class p = 1;
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(k < 0 ? -k : k));
  return k < 0 ? Rational(mpq_class(mpz_class(1), p)) : Rational(mpq_class(p));
}

std::string Rational::numerator() const { return value_.get_num().get_str(); }
std::string Rational::denominator() const { return value_.get_den().get_str(); }

bool Rational::is_integer() const { return value_.get_den() == 1; }

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return Rational(mpq_class(1) / value_);
}

Rational Rational::pow(int k) const {
  Rational base = k < 0 ? inverse() : *this;
  Rational out(1);
  for (int i = 0; i < (k < 0 ? -k : k); ++i) out *= base;
  return out;
}

Rational Rational::sqrt_exact(bool& ok) const {
  ok = false;
  if (sign() < 0) return Rational();
  const mpz_class& n = value_.get_num();
  const mpz_class& d = value_.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) {
    return Rational();
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  ok = true;
  return Rational(mpq_class(rn, rd));
}

std::string Rational::str() const {
  if (is_integer()) return numerator();
  return numerator() + "/" + denominator();
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace isingpair
