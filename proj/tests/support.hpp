#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "eulnar/finite_operator.hpp"
#include "eulnar/polynomial.hpp"
#include "eulnar/rational.hpp"
#include "eulnar/series.hpp"

namespace testing {

using eulnar::FiniteOperator;
using eulnar::Poly;
using eulnar::Rational;
using eulnar::Series;

inline Rational Q(long p, long q = 1) { return eulnar::make_rational(p, q); }

inline Poly P(std::initializer_list<Rational> c) { return Poly(std::vector<Rational>(c)); }

inline Series S(std::initializer_list<Rational> c, std::size_t order) { return Series(std::vector<Rational>(c), order); }

/// scale times the integer rows.
inline FiniteOperator M(const Rational& scale, std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Rational>> r;
  for (const auto& row : rows) {
    r.emplace_back();
    for (long v : row) r.back().push_back(scale * v);
  }
  return FiniteOperator::from_rows(r);
}

inline std::string str(const Poly& p) { return p.to_string(); }

}  // namespace testing
