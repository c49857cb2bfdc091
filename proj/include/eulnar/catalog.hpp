#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "eulnar/series.hpp"

namespace eulnar {

/// Named series, each built from its closed form.
Series exp_series(std::size_t order);
/// 1/(1-x)
Series geom_series(std::size_t order);
/// 1+x
Series onepx_series(std::size_t order);
/// Catalan series sum C(2n,n)/(n+1) x^n.
Series catalan_series(std::size_t order);
/// Generalized binomial series: coefficient n is phi/(phi+n beta) C(phi+n beta, n),
/// evaluated as phi (phi+n beta-1)_{n-1}/n! so phi + n beta = 0 needs no care.
Series genbinom_series(const Rational& beta, std::size_t order, const Rational& phi = 1);

struct CatalogEntry {
  std::string name;
  Series series;
};

/// exp, geom, onepx, catalan, genbinom(1/2), genbinom(-1), genbinom(3) at the given order.
std::vector<CatalogEntry> catalog(std::size_t order);

}  // namespace eulnar
