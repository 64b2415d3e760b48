#include "isingpair/model/basis.hpp"

#include <sstream>
#include <stdexcept>

namespace isingpair {

SpanningBasis::SpanningBasis(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("SpanningBasis: n must be positive");
  for (int j = 0; j < n; ++j) names_.push_back("a" + std::to_string(j));
  if (n >= 2) {
    alpha1_ = names_.size();
    names_.emplace_back("alpha1");
  }
  if (n >= 4) {
    alpha2_ = names_.size();
    names_.emplace_back("alpha2");
  }
}

std::size_t SpanningBasis::axis(int j) const {
  const int r = ((j % n_) + n_) % n_;
  return static_cast<std::size_t>(r);
}

std::optional<std::size_t> SpanningBasis::find(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

Element Element::unit(std::size_t dim, std::size_t label, const Rational& s) {
  Element e(dim);
  e.add(label, s);
  return e;
}

Element Element::from_dense(std::span<const Rational> v) {
  Element e(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) e.add(i, v[i]);
  return e;
}

Rational Element::coeff(std::size_t label) const {
  auto it = coords_.find(label);
  return it == coords_.end() ? Rational(0) : it->second;
}

Element& Element::add(std::size_t label, const Rational& s) {
  if (label >= dim_) throw std::out_of_range("Element: label out of range");
  if (s.is_zero()) return *this;
  auto [it, fresh] = coords_.try_emplace(label, s);
  if (!fresh) {
    it->second += s;
    if (it->second.is_zero()) coords_.erase(it);
  }
  return *this;
}

Element& Element::axpy(const Rational& s, const Element& other) {
  if (other.dim_ != dim_) throw std::invalid_argument("Element: dimension mismatch");
  if (s.is_zero()) return *this;
  for (const auto& [label, c] : other.coords_) add(label, s * c);
  return *this;
}

Element operator*(const Rational& s, const Element& a) {
  Element out(a.dim_);
  if (s.is_zero()) return out;
  for (const auto& [label, c] : a.coords_) out.coords_.emplace(label, s * c);
  return out;
}

Vector Element::dense() const {
  Vector v(dim_);
  for (const auto& [label, c] : coords_) v[label] = c;
  return v;
}

std::string Element::str(const SpanningBasis& basis) const {
  if (coords_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [label, c] : coords_) {
    if (!first) os << " + ";
    first = false;
    os << c.str() << "*" << basis.name(label);
  }
  return os.str();
}

Rational pair(const Matrix& gram, const Element& x, const Element& y) {
  Rational s;
  for (const auto& [i, a] : x.coords())
    for (const auto& [j, b] : y.coords()) s += a * b * gram(i, j);
  return s;
}

Element apply(const Matrix& m, const Element& x) {
  Element out(m.rows());
  for (const auto& [j, c] : x.coords())
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) out.add(i, c * m(i, j));
  return out;
}

}  // namespace isingpair
