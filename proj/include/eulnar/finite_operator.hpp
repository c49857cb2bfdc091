#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "eulnar/polynomial.hpp"
#include "eulnar/rational.hpp"

namespace eulnar {

/// Exact rational matrix acting on coefficient vectors in the monomial basis.
/// Entry (i, j) is the coefficient of x^i in the image of x^j. Most operators
/// are square; the shift maps between adjacent spaces are rectangular.
class FiniteOperator {
 public:
  FiniteOperator(std::size_t rows, std::size_t cols);
  explicit FiniteOperator(std::size_t dim) : FiniteOperator(dim, dim) {}

  static FiniteOperator identity(std::size_t dim);
  /// Column j is the coefficient vector of columns[j]; each must have degree < rows.
  static FiniteOperator from_columns(const std::vector<Poly>& columns, std::size_t rows);
  static FiniteOperator from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  /// Dimension of a square operator; throws for rectangular ones.
  std::size_t dim() const;

  const Rational& at(std::size_t i, std::size_t j) const;
  Rational& at(std::size_t i, std::size_t j);

  Poly column(std::size_t j) const;
  std::vector<Rational> row(std::size_t i) const;

  FiniteOperator operator*(const FiniteOperator& o) const;
  FiniteOperator operator+(const FiniteOperator& o) const;
  FiniteOperator operator-(const FiniteOperator& o) const;
  FiniteOperator scaled(const Rational& s) const;
  FiniteOperator transpose() const;
  FiniteOperator power(unsigned k) const;
  /// Gauss-Jordan inverse; throws std::domain_error when singular.
  FiniteOperator inverse() const;
  /// Top-left block of the given shape.
  FiniteOperator block(std::size_t rows, std::size_t cols) const;

  /// Throws std::domain_error when deg p >= cols().
  Poly apply(const Poly& p) const;

  bool operator==(const FiniteOperator& o) const = default;
  bool is_identity() const;

  std::string to_string() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> entries_;
};

}  // namespace eulnar
