#pragma once

#include <optional>
#include <string>

#include "eulnar/polynomial.hpp"

namespace eulnar {

/// Element p(t)/(1-t)^k of Q[t] localized at 1-t. Stored with p not divisible
/// by 1-t whenever k > 0, so equal values have equal representations.
class TLocal {
 public:
  TLocal() = default;
  explicit TLocal(Poly p, unsigned k = 0);

  const Poly& numerator() const { return p_; }
  unsigned exponent() const { return k_; }
  bool is_polynomial() const { return k_ == 0; }

  TLocal operator-() const { return TLocal(-p_, k_); }
  friend TLocal operator+(const TLocal& a, const TLocal& b);
  friend TLocal operator-(const TLocal& a, const TLocal& b) { return a + (-b); }
  friend TLocal operator*(const TLocal& a, const TLocal& b) { return TLocal(a.p_ * b.p_, a.k_ + b.k_); }
  TLocal& operator+=(const TLocal& o) { return *this = *this + o; }
  TLocal& operator-=(const TLocal& o) { return *this = *this - o; }
  bool operator==(const TLocal& o) const { return k_ == o.k_ && p_ == o.p_; }

  /// Units are c (1-t)^j times a unit denominator.
  std::optional<TLocal> inverse() const;
  std::string to_string() const;

 private:
  void normalize();
  Poly p_;
  unsigned k_ = 0;
};

template <>
struct RingTraits<TLocal> {
  static TLocal zero() { return TLocal(); }
  static TLocal one() { return TLocal(Poly(Rational(1))); }
  static TLocal from_rational(const Rational& q) { return TLocal(Poly(q)); }
  static bool is_zero(const TLocal& v) { return v.numerator().is_zero(); }
  static std::optional<TLocal> inverse(const TLocal& v) { return v.inverse(); }
  static TLocal scale(const TLocal& v, const Rational& s) { return TLocal(v.numerator().scaled(s), v.exponent()); }
  static std::string to_string(const TLocal& v) { return v.to_string(); }
  static bool compound(const TLocal&) { return true; }
};

}  // namespace eulnar
