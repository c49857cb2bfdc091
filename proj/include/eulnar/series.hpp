#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "eulnar/polynomial.hpp"
#include "eulnar/rational.hpp"
#include "eulnar/ring.hpp"

namespace eulnar {

/// Power series known exactly through x^order. Binary operations take the
/// smaller order of their operands and never extend silently.
template <class R>
class TruncatedSeries {
 public:
  TruncatedSeries() : coeffs_(1, ring_zero<R>()), order_(0) {}
  TruncatedSeries(std::vector<R> coeffs, std::size_t order) : coeffs_(std::move(coeffs)), order_(order) {
    coeffs_.resize(order_ + 1, ring_zero<R>());
  }

  static TruncatedSeries zero(std::size_t order) { return TruncatedSeries({}, order); }
  static TruncatedSeries constant(R c, std::size_t order) { return TruncatedSeries({std::move(c)}, order); }
  static TruncatedSeries one(std::size_t order) { return constant(ring_one<R>(), order); }
  static TruncatedSeries x(std::size_t order) {
    return TruncatedSeries({ring_zero<R>(), ring_one<R>()}, order);
  }
  static TruncatedSeries from_polynomial(const Polynomial<R>& p, std::size_t order) {
    return TruncatedSeries(p.coeffs(), order);
  }

  std::size_t order() const { return order_; }
  const std::vector<R>& coeffs() const { return coeffs_; }
  const R& coeff(std::size_t k) const {
    if (k > order_)
      throw std::out_of_range("coefficient " + std::to_string(k) + " beyond truncation order " +
                              std::to_string(order_));
    return coeffs_[k];
  }
  R& operator[](std::size_t k) { return coeffs_.at(k); }

  /// Drops coefficients above n; n must not exceed the current order.
  TruncatedSeries truncated(std::size_t n) const {
    if (n > order_) throw std::invalid_argument("cannot raise the truncation order of a series");
    return TruncatedSeries(std::vector<R>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n + 1)), n);
  }

  Polynomial<R> to_polynomial() const { return Polynomial<R>(coeffs_); }

  bool operator==(const TruncatedSeries& o) const { return order_ == o.order_ && coeffs_ == o.coeffs_; }
  /// Equality of the common prefix.
  bool agrees_with(const TruncatedSeries& o) const {
    std::size_t n = std::min(order_, o.order_);
    for (std::size_t k = 0; k <= n; ++k)
      if (!(coeffs_[k] == o.coeffs_[k])) return false;
    return true;
  }
  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const R& c) { return ring_is_zero(c); });
  }

  TruncatedSeries operator-() const {
    TruncatedSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    std::size_t n = std::min(a.order_, b.order_);
    std::vector<R> out(n + 1);
    for (std::size_t k = 0; k <= n; ++k) out[k] = a.coeffs_[k] + b.coeffs_[k];
    return TruncatedSeries(std::move(out), n);
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    std::size_t n = std::min(a.order_, b.order_);
    std::vector<R> out(n + 1, ring_zero<R>());
    for (std::size_t i = 0; i <= n; ++i) {
      if (ring_is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; i + j <= n; ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return TruncatedSeries(std::move(out), n);
  }
  TruncatedSeries& operator+=(const TruncatedSeries& o) { return *this = *this + o; }
  TruncatedSeries& operator-=(const TruncatedSeries& o) { return *this = *this - o; }
  TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

  TruncatedSeries times(const R& c) const {
    TruncatedSeries r = *this;
    for (auto& v : r.coeffs_) v = v * c;
    return r;
  }
  TruncatedSeries scaled(const Rational& s) const {
    TruncatedSeries r = *this;
    for (auto& v : r.coeffs_) v = ring_scale(v, s);
    return r;
  }

  /// 1/f; the constant term must be a unit of the ring.
  TruncatedSeries inverse() const {
    auto inv0 = RingTraits<R>::inverse(coeffs_[0]);
    if (!inv0) throw std::domain_error("series inverse: constant term is not invertible");
    std::vector<R> out(order_ + 1, ring_zero<R>());
    out[0] = *inv0;
    for (std::size_t k = 1; k <= order_; ++k) {
      R acc = ring_zero<R>();
      for (std::size_t j = 1; j <= k; ++j)
        if (!ring_is_zero(coeffs_[j])) acc += coeffs_[j] * out[k - j];
      out[k] = -(acc * *inv0);
    }
    return TruncatedSeries(std::move(out), order_);
  }
  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
    std::size_t n = std::min(a.order_, b.order_);
    return a.truncated(n) * b.truncated(n).inverse();
  }

  /// f(g(x)) by Horner accumulation; g must have zero constant term.
  TruncatedSeries compose(const TruncatedSeries& g) const {
    if (!ring_is_zero(g.coeffs_[0])) throw std::domain_error("compose: inner series has nonzero constant term");
    std::size_t n = std::min(order_, g.order_);
    TruncatedSeries inner = g.truncated(n);
    TruncatedSeries acc = zero(n);
    for (std::size_t k = n + 1; k-- > 0;) {
      acc = acc * inner;
      acc.coeffs_[0] += coeffs_[k];
    }
    return acc;
  }

  /// Compositional inverse h with g(h(x)) = x, solved one coefficient at a time.
  TruncatedSeries reversion() const {
    if (!ring_is_zero(coeffs_[0])) throw std::domain_error("reversion: series has nonzero constant term");
    if (order_ < 1) throw std::domain_error("reversion: order must be at least 1");
    auto inv1 = RingTraits<R>::inverse(coeffs_[1]);
    if (!inv1) throw std::domain_error("reversion: linear coefficient is not invertible");
    std::vector<R> h(order_ + 1, ring_zero<R>());
    h[1] = *inv1;
    for (std::size_t k = 2; k <= order_; ++k) {
      // With h_k still zero, [x^k] g(h) is exactly g_1 h_k short of zero.
      TruncatedSeries partial(std::vector<R>(h.begin(), h.begin() + static_cast<std::ptrdiff_t>(k + 1)), k);
      TruncatedSeries power = partial;
      R acc = ring_zero<R>();
      for (std::size_t j = 2; j <= k; ++j) {
        power = power * partial;
        if (!ring_is_zero(coeffs_[j])) acc += coeffs_[j] * power.coeffs_[k];
      }
      h[k] = -(acc * *inv1);
    }
    return TruncatedSeries(std::move(h), order_);
  }

  /// Formal derivative; known through order - 1.
  TruncatedSeries derivative() const {
    if (order_ == 0) throw std::domain_error("derivative of an order-0 series has no known coefficients");
    std::vector<R> out(order_);
    for (std::size_t k = 1; k <= order_; ++k) out[k - 1] = ring_scale(coeffs_[k], Rational(k));
    return TruncatedSeries(std::move(out), order_ - 1);
  }

  TruncatedSeries times_x() const {
    std::vector<R> out(1, ring_zero<R>());
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return TruncatedSeries(std::move(out), order_ + 1);
  }
  TruncatedSeries divide_by_x() const {
    if (!ring_is_zero(coeffs_[0])) throw std::domain_error("divide_by_x: nonzero constant term");
    if (order_ == 0) throw std::domain_error("divide_by_x: order-0 series");
    return TruncatedSeries(std::vector<R>(coeffs_.begin() + 1, coeffs_.end()), order_ - 1);
  }

  /// log f for f(0) = 1, from k L_k = k f_k - sum_{j<k} j L_j f_{k-j}.
  TruncatedSeries log() const {
    if (!(coeffs_[0] == ring_one<R>())) throw std::domain_error("log: constant term must be 1");
    std::vector<R> out(order_ + 1, ring_zero<R>());
    for (std::size_t k = 1; k <= order_; ++k) {
      R acc = ring_scale(coeffs_[k], Rational(k));
      for (std::size_t j = 1; j < k; ++j)
        if (!ring_is_zero(out[j])) acc -= ring_scale(out[j], Rational(j)) * coeffs_[k - j];
      out[k] = ring_scale(acc, Rational(1) / Rational(k));
    }
    return TruncatedSeries(std::move(out), order_);
  }

  /// exp f for f(0) = 0, from k E_k = sum_{j<=k} j f_j E_{k-j}.
  TruncatedSeries exp() const {
    if (!ring_is_zero(coeffs_[0])) throw std::domain_error("exp: constant term must be 0");
    std::vector<R> out(order_ + 1, ring_zero<R>());
    out[0] = ring_one<R>();
    for (std::size_t k = 1; k <= order_; ++k) {
      R acc = ring_zero<R>();
      for (std::size_t j = 1; j <= k; ++j)
        if (!ring_is_zero(coeffs_[j])) acc += ring_scale(coeffs_[j], Rational(j)) * out[k - j];
      out[k] = ring_scale(acc, Rational(1) / Rational(k));
    }
    return TruncatedSeries(std::move(out), order_);
  }

  /// f^q = exp(q log f) for f(0) = 1.
  TruncatedSeries pow(const Rational& q) const { return log().scaled(q).exp(); }

  /// Integer power by repeated multiplication; works for any constant term.
  TruncatedSeries pow(unsigned k) const {
    TruncatedSeries acc = one(order_);
    for (unsigned i = 0; i < k; ++i) acc *= *this;
    return acc;
  }

  std::string to_string(const std::string& var = "x") const {
    std::string body = to_polynomial().to_string(var);
    return body + " + O(" + var + "^" + std::to_string(order_ + 1) + ")";
  }

 private:
  std::vector<R> coeffs_;
  std::size_t order_;
};

using Series = TruncatedSeries<Rational>;
using PolySeries = TruncatedSeries<Poly>;

/// Coefficientwise embedding of a rational series into series over Q[t].
inline PolySeries lift(const Series& s) {
  std::vector<Poly> out;
  out.reserve(s.order() + 1);
  for (const auto& c : s.coeffs()) out.emplace_back(c);
  return PolySeries(std::move(out), s.order());
}

/// s_0..s_nMax with sum s_n(phi) x^n / n! = b(x) exp(phi gLog(x)), each s_n a
/// polynomial in phi.
std::vector<Poly> sheffer_rows(const Series& b, const Series& gLog, std::size_t nMax);

}  // namespace eulnar
