#include "eulnar/catalog.hpp"

#include "eulnar/combinatorics.hpp"

namespace eulnar {

Series exp_series(std::size_t order) {
  std::vector<Rational> c(order + 1);
  for (std::size_t k = 0; k <= order; ++k) c[k] = 1 / factorial(static_cast<unsigned>(k));
  return Series(std::move(c), order);
}

Series geom_series(std::size_t order) { return Series(std::vector<Rational>(order + 1, Rational(1)), order); }

Series onepx_series(std::size_t order) { return Series({Rational(1), Rational(1)}, order); }

Series catalan_series(std::size_t order) {
  std::vector<Rational> c(order + 1);
  for (std::size_t k = 0; k <= order; ++k)
    c[k] = binomial(static_cast<long>(2 * k), static_cast<long>(k)) / Rational(k + 1);
  return Series(std::move(c), order);
}

Series genbinom_series(const Rational& beta, std::size_t order, const Rational& phi) {
  std::vector<Rational> c(order + 1);
  c[0] = 1;
  for (std::size_t k = 1; k <= order; ++k) {
    Rational top = phi + beta * Rational(k) - 1;
    c[k] = phi * falling_poly(static_cast<unsigned>(k - 1)).evaluate(top) / factorial(static_cast<unsigned>(k));
  }
  return Series(std::move(c), order);
}

std::vector<CatalogEntry> catalog(std::size_t order) {
  return {
      {"exp", exp_series(order)},
      {"geom", geom_series(order)},
      {"onepx", onepx_series(order)},
      {"catalan", catalan_series(order)},
      {"genbinom(1/2)", genbinom_series(make_rational(1, 2), order)},
      {"genbinom(-1)", genbinom_series(Rational(-1), order)},
      {"genbinom(3)", genbinom_series(Rational(3), order)},
  };
}

}  // namespace eulnar
