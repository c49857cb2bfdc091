#include "eulnar/riordan.hpp"

#include <stdexcept>

#include "eulnar/combinatorics.hpp"

namespace eulnar {

namespace {

NumeratorResult extract(const Series& diagonal, unsigned exponent, std::size_t n, std::size_t degree_bound) {
  Series full = Series::from_polynomial(one_minus_x_pow(exponent), diagonal.order()) * diagonal;
  NumeratorResult r;
  r.n = static_cast<unsigned>(n);
  r.denominator_exponent = exponent;
  std::size_t cut = std::min(degree_bound, full.order());
  r.numerator = full.truncated(cut).to_polynomial();
  for (std::size_t k = cut + 1; k <= full.order(); ++k)
    if (sgn(full.coeff(k)) != 0) r.residual.emplace_back(k, full.coeff(k));
  r.residual_ok = r.residual.empty() && degree_bound < full.order();
  return r;
}

unsigned exponent_for(ArrayFlavor flavor, std::size_t n) {
  return static_cast<unsigned>(flavor == ArrayFlavor::ordinary ? n + 1 : 2 * n + 1);
}

std::size_t bound_for(ArrayFlavor flavor, std::size_t n) { return flavor == ArrayFlavor::ordinary ? n : 2 * n; }

}  // namespace

SeriesPair make_pair(Series b, Series a) {
  if (sgn(b.coeff(0)) == 0) throw std::domain_error("series pair: b(0) must be nonzero");
  if (a.coeff(0) != 1) throw std::domain_error("series pair: a(0) must be 1");
  return SeriesPair{std::move(b), std::move(a)};
}

Series column(const SeriesPair& pair, ArrayFlavor flavor, std::size_t m) {
  std::size_t n = pair.order();
  Series c = pair.b.truncated(n) * pair.a.truncated(n).pow(static_cast<unsigned>(m));
  if (flavor == ArrayFlavor::exponential)
    for (std::size_t k = 0; k <= n; ++k)
      c[k] *= factorial(static_cast<unsigned>(k)) / factorial(static_cast<unsigned>(m));
  return c;
}

Series riordan_column(const SeriesPair& pair, ArrayFlavor flavor, std::size_t m) {
  std::size_t n = pair.order();
  Series base = pair.b.truncated(n) * pair.a.truncated(n).pow(static_cast<unsigned>(m));
  std::vector<Rational> out(n + 1, Rational(0));
  for (std::size_t k = m; k <= n; ++k) {
    out[k] = base.coeff(k - m);
    if (flavor == ArrayFlavor::exponential)
      out[k] *= factorial(static_cast<unsigned>(k)) / factorial(static_cast<unsigned>(m));
  }
  return Series(std::move(out), n);
}

Poly square_row(const SeriesPair& pair, std::size_t n) {
  if (pair.order() < n) throw std::domain_error("square_row: series order below row index");
  Series b = pair.b.truncated(n);
  Series am1 = pair.a.truncated(n) - Series::one(n);
  Series power = Series::one(n);
  std::vector<Rational> row(n + 1);
  for (std::size_t m = 0; m <= n; ++m) {
    row[m] = (b * power).coeff(n);
    power *= am1;
  }
  return Poly(std::move(row));
}

Series diagonal_series(const SeriesPair& pair, ArrayFlavor flavor, std::size_t n, std::size_t order) {
  if (pair.order() < n) throw std::domain_error("diagonal_series: series order below diagonal index");
  Poly s = sheffer_rows(pair.b, pair.a.log(), n).back();
  Rational inv_fact = 1 / factorial(static_cast<unsigned>(n));
  Poly rising = rising_poly(static_cast<unsigned>(n));
  std::vector<Rational> out(order + 1);
  for (std::size_t m = 0; m <= order; ++m) {
    Rational at = Rational(m);
    out[m] = s.evaluate(at) * inv_fact;
    if (flavor == ArrayFlavor::exponential) out[m] *= rising.evaluate(at + 1);
  }
  return Series(std::move(out), order);
}

std::size_t required_order(std::size_t n, std::size_t guard) { return 2 * n + guard; }

NumeratorResult numerator(const SeriesPair& pair, ArrayFlavor flavor, std::size_t n, std::size_t guard) {
  Series diag = diagonal_series(pair, flavor, n, required_order(n, guard));
  return extract(diag, exponent_for(flavor, n), n, bound_for(flavor, n));
}

Poly euler_poly(std::size_t n) {
  std::size_t order = required_order(n);
  Series e = Series::x(order).exp();
  NumeratorResult r = numerator(make_pair(Series::one(order), e), ArrayFlavor::ordinary, n);
  return r.numerator.scaled(factorial(static_cast<unsigned>(n)));
}

Poly narayana_poly(std::size_t n) {
  if (n == 0) return Poly(Rational(1));
  std::vector<Rational> c(n + 1, Rational(0));
  long nn = static_cast<long>(n);
  for (long m = 1; m <= nn; ++m) c[m] = binomial(nn, m - 1) * binomial(nn, nn - m) / nn;
  return Poly(std::move(c));
}

Poly narayana_b_poly(std::size_t n) {
  std::vector<Rational> c(n + 1);
  for (std::size_t m = 0; m <= n; ++m) {
    Rational b = binomial(static_cast<long>(n), static_cast<long>(m));
    c[m] = b * b;
  }
  return Poly(std::move(c));
}

FiniteOperator pascal_power(const Rational& phi, std::size_t size) {
  if (size == 0) throw std::invalid_argument("pascal_power: size must be positive");
  FiniteOperator p(size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      p.at(i, j) = binomial(static_cast<long>(i), static_cast<long>(j)) * power(phi, static_cast<unsigned>(i - j));
  return p;
}

std::pair<Series, Series> riordan_product(const Series& f1, const Series& g1, const Series& f2, const Series& g2) {
  return {f1 * f2.compose(g1), g2.compose(g1)};
}

std::pair<Series, Series> riordan_inverse(const Series& f, const Series& g) {
  Series h = g.reversion();
  return {f.compose(h).inverse(), h};
}

NumeratorResult materialized_numerator(const Series& f, const Series& g, ArrayFlavor flavor, std::size_t n,
                                       std::size_t guard) {
  std::size_t order = required_order(n, guard);
  std::size_t need = order + n;
  if (f.order() < need || g.order() < need)
    throw std::domain_error("materialized_numerator: series order " + std::to_string(std::min(f.order(), g.order())) +
                            " below " + std::to_string(need));
  Series fc = f.truncated(need);
  Series gc = g.truncated(need);
  Series col = fc;
  std::vector<Rational> diag(order + 1);
  for (std::size_t m = 0; m <= order; ++m) {
    diag[m] = col.coeff(m + n);
    if (flavor == ArrayFlavor::exponential)
      diag[m] *= factorial(static_cast<unsigned>(m + n)) / factorial(static_cast<unsigned>(m));
    col *= gc;
  }
  return extract(Series(std::move(diag), order), exponent_for(flavor, n), n, bound_for(flavor, n));
}

}  // namespace eulnar
