#pragma once

#include <cstddef>
#include <vector>

#include "eulnar/finite_operator.hpp"
#include "eulnar/polynomial.hpp"
#include "eulnar/series.hpp"

namespace eulnar {

inline constexpr std::size_t kDefaultGuard = 4;

/// Data (b, a) of the square array whose column m is b a^m.
struct SeriesPair {
  Series b;
  Series a;
  std::size_t order() const { return std::min(b.order(), a.order()); }
};

/// Validates b(0) != 0 and a(0) = 1.
SeriesPair make_pair(Series b, Series a);

enum class ArrayFlavor { ordinary, exponential };

struct NumeratorResult {
  Poly numerator;
  unsigned denominator_exponent = 0;
  unsigned n = 0;
  bool residual_ok = false;
  /// Coefficients beyond the degree bound that failed to vanish, as (index, value).
  std::vector<std::pair<std::size_t, Rational>> residual;
};

/// Column m of the square array (b, a): b a^m. The exponential flavor scales
/// entry k by k!/m!.
Series column(const SeriesPair& pair, ArrayFlavor flavor, std::size_t m);

/// Column m of the lower-triangular array (b, x a): x^m b a^m, truncated at
/// the pair's order.
Series riordan_column(const SeriesPair& pair, ArrayFlavor flavor, std::size_t m);

/// Row n of (b, a - 1).
Poly square_row(const SeriesPair& pair, std::size_t n);

/// n-th descending diagonal of (b, x a) through x^order, by evaluating the
/// Sheffer row s_n of (b, log a) at m = 0, 1, 2, ...
Series diagonal_series(const SeriesPair& pair, ArrayFlavor flavor, std::size_t n, std::size_t order);

/// Numerator of the n-th diagonal over (1-x)^{n+1} (ordinary) or
/// (1-x)^{2n+1} (exponential). Truncation order defaults to 2n + guard.
NumeratorResult numerator(const SeriesPair& pair, ArrayFlavor flavor, std::size_t n,
                          std::size_t guard = kDefaultGuard);

Poly euler_poly(std::size_t n);
Poly narayana_poly(std::size_t n);
Poly narayana_b_poly(std::size_t n);

/// P^phi restricted to the first size rows and columns: entries C(i,j) phi^{i-j}.
FiniteOperator pascal_power(const Rational& phi, std::size_t size);

/// Series data required by numerator() for index n at the given guard.
std::size_t required_order(std::size_t n, std::size_t guard = kDefaultGuard);

/// Riordan product (f1, g1)(f2, g2) = (f1 f2(g1), g2(g1)), with g in the
/// x-multiplied form (g(0) = 0).
std::pair<Series, Series> riordan_product(const Series& f1, const Series& g1, const Series& f2, const Series& g2);

/// Inverse of the Riordan array (f, g): (1/f(h), h) with h the reversion of g.
std::pair<Series, Series> riordan_inverse(const Series& f, const Series& g);

/// Numerator polynomials of an arbitrary Riordan array (f, g) with
/// g = x a(x): diagonal n is sum_m [x^{m+n}] f g^m x^m, computed from
/// materialized columns instead of Sheffer rows.
NumeratorResult materialized_numerator(const Series& f, const Series& g, ArrayFlavor flavor, std::size_t n,
                                       std::size_t guard = kDefaultGuard);

}  // namespace eulnar
