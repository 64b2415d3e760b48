#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "isingpair/linalg/rational.hpp"

namespace isingpair {

using Vector = std::vector<Rational>;

/// Dense row-major matrix over Rational.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const Rational> v);

  Matrix transpose() const;
  bool is_symmetric() const;
  bool is_zero() const;

  Matrix operator*(const Matrix& o) const;
  Vector operator*(std::span<const Rational> v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Rational& s) const;

  /// Principal submatrix on the given index set, in the given order.
  Matrix principal(std::span<const std::size_t> idx) const;

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

/// xᵀ G y.
Rational bilinear(const Matrix& g, std::span<const Rational> x, std::span<const Rational> y);

}  // namespace isingpair
