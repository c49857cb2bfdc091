#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "eulnar/ring.hpp"

namespace eulnar {

/// Degree of a polynomial. The zero polynomial has degree minus infinity,
/// which orders below every finite degree.
class Degree {
 public:
  static Degree minus_infinity() { return Degree(); }
  explicit Degree(std::size_t d) : value_(d) {}

  bool is_minus_infinity() const { return !value_.has_value(); }
  std::size_t value() const {
    if (!value_) throw std::logic_error("degree of the zero polynomial has no value");
    return *value_;
  }

  auto operator<=>(const Degree&) const = default;
  bool operator==(const Degree&) const = default;
  friend auto operator<=>(const Degree& d, std::size_t n) { return d <=> Degree(n); }
  friend bool operator==(const Degree& d, std::size_t n) { return d == Degree(n); }

  std::string to_string() const { return value_ ? std::to_string(*value_) : "-inf"; }

 private:
  Degree() = default;
  std::optional<std::size_t> value_;
};

/// Dense polynomial over a coefficient ring; coefficient k belongs to x^k.
/// Trailing zeros are always stripped.
template <class R>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(R constant) : coeffs_{std::move(constant)} { normalize(); }
  explicit Polynomial(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  static Polynomial monomial(std::size_t k, R c = ring_one<R>()) {
    std::vector<R> v(k + 1, ring_zero<R>());
    v[k] = std::move(c);
    return Polynomial(std::move(v));
  }
  static Polynomial x() { return monomial(1); }

  const std::vector<R>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  Degree degree() const {
    return coeffs_.empty() ? Degree::minus_infinity() : Degree(coeffs_.size() - 1);
  }
  R coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : ring_zero<R>(); }
  /// Number of stored coefficients (degree + 1, or 0 for the zero polynomial).
  std::size_t size() const { return coeffs_.size(); }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), ring_zero<R>());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    normalize();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), ring_zero<R>());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    normalize();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<R> out(a.coeffs_.size() + b.coeffs_.size() - 1, ring_zero<R>());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (ring_is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  /// Multiplication by a ring element.
  Polynomial times(const R& c) const {
    Polynomial r = *this;
    for (auto& v : r.coeffs_) v = v * c;
    r.normalize();
    return r;
  }
  /// Multiplication by a rational scalar.
  Polynomial scaled(const Rational& s) const {
    Polynomial r = *this;
    for (auto& v : r.coeffs_) v = ring_scale(v, s);
    r.normalize();
    return r;
  }

  bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

  /// Horner evaluation at a ring point.
  R evaluate(const R& at) const {
    R acc = ring_zero<R>();
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * at + coeffs_[k];
    return acc;
  }

  /// p(q(x)).
  Polynomial compose(const Polynomial& q) const {
    Polynomial acc;
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * q + Polynomial(coeffs_[k]);
    return acc;
  }

  /// p(x + c).
  Polynomial shifted(const R& c) const {
    return compose(Polynomial(std::vector<R>{c, ring_one<R>()}));
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return Polynomial();
    std::vector<R> out;
    out.reserve(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) out.push_back(ring_scale(coeffs_[k], Rational(k)));
    return Polynomial(std::move(out));
  }

  /// x^k p(x).
  Polynomial shifted_up(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<R> out(k, ring_zero<R>());
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(out));
  }

  /// p(x)/x^k; the low coefficients must vanish.
  Polynomial shifted_down(std::size_t k) const {
    for (std::size_t i = 0; i < k && i < coeffs_.size(); ++i)
      if (!ring_is_zero(coeffs_[i])) throw std::domain_error("polynomial is not divisible by x^k");
    if (k >= coeffs_.size()) return Polynomial();
    return Polynomial(std::vector<R>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
  }

  std::string to_string(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      const R& c = coeffs_[k];
      if (ring_is_zero(c)) continue;
      std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
      std::string body;
      bool negative = false;
      if constexpr (std::is_same_v<R, Rational>) {
        Rational a = abs(c);
        negative = sgn(c) < 0;
        if (a == 1 && k > 0) body = mono;
        else body = RingTraits<R>::to_string(a) + mono;
      } else {
        if (c == ring_one<R>() && k > 0) body = mono;
        else if (RingTraits<R>::compound(c)) body = "(" + RingTraits<R>::to_string(c) + ")" + mono;
        else body = RingTraits<R>::to_string(c) + mono;
      }
      if (out.empty()) out = negative ? "-" + body : body;
      else out += negative ? " - " + body : " + " + body;
    }
    return out;
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && ring_is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<R> coeffs_;
};

using Poly = Polynomial<Rational>;
using BiPoly = Polynomial<Poly>;

template <class R>
struct RingTraits<Polynomial<R>> {
  using P = Polynomial<R>;
  static P zero() { return P(); }
  static P one() { return P(ring_one<R>()); }
  static P from_rational(const Rational& q) { return P(ring_from<R>(q)); }
  static bool is_zero(const P& p) { return p.is_zero(); }
  static std::optional<P> inverse(const P& p) {
    if (p.degree() != Degree(0)) return std::nullopt;
    auto inv = RingTraits<R>::inverse(p.coeff(0));
    if (!inv) return std::nullopt;
    return P(*inv);
  }
  static P scale(const P& p, const Rational& s) { return p.scaled(s); }
  static std::string to_string(const P& p) { return p.to_string("t"); }
  static bool compound(const P& p) {
    if (p.size() > 1) return true;
    if (p.size() == 0) return false;
    std::string s = RingTraits<R>::to_string(p.coeff(0));
    return !s.empty() && s[0] == '-';
  }
};

/// Embeds a rational polynomial as a polynomial with constant-polynomial coefficients.
inline Polynomial<Poly> lift(const Poly& p) {
  std::vector<Poly> out;
  out.reserve(p.size());
  for (const auto& c : p.coeffs()) out.emplace_back(c);
  return Polynomial<Poly>(std::move(out));
}

}  // namespace eulnar
