#include "eulnar/finite_operator.hpp"

#include <algorithm>
#include <stdexcept>

namespace eulnar {

FiniteOperator::FiniteOperator(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

FiniteOperator FiniteOperator::identity(std::size_t dim) {
  FiniteOperator m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

FiniteOperator FiniteOperator::from_columns(const std::vector<Poly>& columns, std::size_t rows) {
  FiniteOperator m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].degree() >= rows)
      throw std::domain_error("column " + std::to_string(j) + " has degree " + columns[j].degree().to_string() +
                              ", too large for " + std::to_string(rows) + " rows");
    for (std::size_t i = 0; i < columns[j].size(); ++i) m.at(i, j) = columns[j].coeff(i);
  }
  return m;
}

FiniteOperator FiniteOperator::from_rows(const std::vector<std::vector<Rational>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  FiniteOperator m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

std::size_t FiniteOperator::dim() const {
  if (!square()) throw std::logic_error("dim() of a rectangular operator");
  return rows_;
}

const Rational& FiniteOperator::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("operator index out of range");
  return entries_[i * cols_ + j];
}

Rational& FiniteOperator::at(std::size_t i, std::size_t j) {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("operator index out of range");
  return entries_[i * cols_ + j];
}

Poly FiniteOperator::column(std::size_t j) const {
  std::vector<Rational> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return Poly(std::move(c));
}

std::vector<Rational> FiniteOperator::row(std::size_t i) const {
  return {entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

FiniteOperator FiniteOperator::operator*(const FiniteOperator& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("operator shapes do not compose");
  FiniteOperator r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

FiniteOperator FiniteOperator::operator+(const FiniteOperator& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("operator shapes differ");
  FiniteOperator r = *this;
  for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] += o.entries_[k];
  return r;
}

FiniteOperator FiniteOperator::operator-(const FiniteOperator& o) const { return *this + o.scaled(-1); }

FiniteOperator FiniteOperator::scaled(const Rational& s) const {
  FiniteOperator r = *this;
  for (auto& e : r.entries_) e *= s;
  return r;
}

FiniteOperator FiniteOperator::transpose() const {
  FiniteOperator r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

FiniteOperator FiniteOperator::power(unsigned k) const {
  FiniteOperator acc = identity(dim());
  for (unsigned i = 0; i < k; ++i) acc = acc * *this;
  return acc;
}

FiniteOperator FiniteOperator::inverse() const {
  std::size_t n = dim();
  FiniteOperator a = *this;
  FiniteOperator inv = identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && sgn(a.at(pivot, c)) == 0) ++pivot;
    if (pivot == n) throw std::domain_error("operator is singular");
    if (pivot != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a.at(pivot, j), a.at(c, j));
        std::swap(inv.at(pivot, j), inv.at(c, j));
      }
    Rational scale = 1 / a.at(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a.at(c, j) *= scale;
      inv.at(c, j) *= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(a.at(i, c)) == 0) continue;
      Rational f = a.at(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(c, j);
        inv.at(i, j) -= f * inv.at(c, j);
      }
    }
  }
  return inv;
}

FiniteOperator FiniteOperator::block(std::size_t rows, std::size_t cols) const {
  if (rows > rows_ || cols > cols_) throw std::out_of_range("block larger than operator");
  FiniteOperator r(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) r.at(i, j) = at(i, j);
  return r;
}

Poly FiniteOperator::apply(const Poly& p) const {
  if (p.degree() >= cols_)
    throw std::domain_error("polynomial of degree " + p.degree().to_string() + " exceeds operator width " +
                            std::to_string(cols_));
  std::vector<Rational> out(rows_, Rational(0));
  for (std::size_t j = 0; j < p.size(); ++j) {
    const Rational c = p.coeff(j);
    if (sgn(c) == 0) continue;
    for (std::size_t i = 0; i < rows_; ++i) out[i] += at(i, j) * c;
  }
  return Poly(std::move(out));
}

bool FiniteOperator::is_identity() const { return square() && *this == identity(rows_); }

std::string FiniteOperator::to_string() const {
  std::vector<std::string> cells(entries_.size());
  std::size_t width = 1;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    cells[k] = eulnar::to_string(entries_[k]);
    width = std::max(width, cells[k].size());
  }
  std::string out;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const std::string& c = cells[i * cols_ + j];
      if (j) out += ' ';
      out += std::string(width - c.size(), ' ') + c;
    }
    out += '\n';
  }
  return out;
}

}  // namespace eulnar
