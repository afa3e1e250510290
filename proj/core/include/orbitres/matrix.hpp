#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace orbitres {

/// Arbitrary-precision rational, always kept in canonical form.
using Rational = mpq_class;

/// Parses "p/q" or "p". Throws on zero denominators and malformed input.
Rational parse_rational(std::string_view text);

/// Canonical rendering: "p" for integers, "p/q" otherwise.
std::string rational_to_string(const Rational& value);

/// Dense matrix over exact rationals, row-major. Operations never mutate
/// their arguments; they return fresh values.
class ExactMatrix {
public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);
  ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix diagonal(const std::vector<Rational>& values);

  /// Matrix literal: rows separated by ';', entries by ',', e.g.
  /// "1,1/2;0,-2".
  static ExactMatrix parse(std::string_view text);
  std::string to_literal() const;

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const Rational& at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, Rational value);

  ExactMatrix transpose() const;
  ExactMatrix operator*(const ExactMatrix& rhs) const;
  ExactMatrix operator+(const ExactMatrix& rhs) const;
  ExactMatrix operator-(const ExactMatrix& rhs) const;
  ExactMatrix operator-() const;
  ExactMatrix scaled(const Rational& factor) const;

  /// Exact inverse by Gauss-Jordan elimination. Throws std::domain_error
  /// when singular.
  ExactMatrix inverse() const;

  Rational trace() const;
  bool is_zero() const;

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

private:
  std::size_t index(std::size_t i, std::size_t j) const { return i * cols_ + j; }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

}  // namespace orbitres
