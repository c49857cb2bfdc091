#pragma once

#include <optional>
#include <string>

#include "eulnar/rational.hpp"

namespace eulnar {

/// Coefficient-ring hooks used by Polynomial and TruncatedSeries. Every ring
/// in this library is a Q-algebra: it embeds Rational and supports
/// multiplication by a Rational scalar.
template <class R>
struct RingTraits;

template <>
struct RingTraits<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational from_rational(const Rational& q) { return q; }
  static bool is_zero(const Rational& q) { return sgn(q) == 0; }
  static std::optional<Rational> inverse(const Rational& q) {
    if (sgn(q) == 0) return std::nullopt;
    return Rational(1) / q;
  }
  static Rational scale(const Rational& q, const Rational& s) { return q * s; }
  static std::string to_string(const Rational& q) { return eulnar::to_string(q); }
  // Whether to_string output needs parentheses when used as a factor.
  static bool compound(const Rational&) { return false; }
};

template <class R>
R ring_zero() {
  return RingTraits<R>::zero();
}

template <class R>
R ring_one() {
  return RingTraits<R>::one();
}

template <class R>
bool ring_is_zero(const R& r) {
  return RingTraits<R>::is_zero(r);
}

template <class R>
R ring_from(const Rational& q) {
  return RingTraits<R>::from_rational(q);
}

template <class R>
R ring_scale(const R& r, const Rational& s) {
  return RingTraits<R>::scale(r, s);
}

}  // namespace eulnar
