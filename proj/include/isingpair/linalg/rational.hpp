#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace isingpair {

/// Exact rational number backed by GMP. Always held in lowest terms with a
/// positive denominator; equality is exact.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(mpq_class value);

  /// Parses "p/q", "p" or "-p/q". Whitespace is not accepted. Throws
  /// std::invalid_argument on malformed input or a zero denominator.
  static Rational parse(std::string_view text);

  /// 2^k for any integer k.
  static Rational pow2(int k);

  const mpq_class& raw() const { return value_; }

  std::string numerator() const;
  std::string denominator() const;

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const;
  int sign() const { return sgn(value_); }

  Rational abs() const;
  Rational inverse() const;
  Rational pow(int k) const;

  /// Exact square root when this is the square of a rational; sets ok=false
  /// otherwise (including negative input).
  Rational sqrt_exact(bool& ok) const;

  /// "p/q", or "p" when q = 1; the sign sits on the numerator.
  std::string str() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace isingpair
