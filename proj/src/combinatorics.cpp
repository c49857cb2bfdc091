#include "eulnar/combinatorics.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace eulnar {

Rational rat_binomial(const Rational& z, unsigned k) {
  Rational acc = 1;
  for (unsigned i = 0; i < k; ++i) acc *= (z - i);
  acc /= factorial(k);
  return acc;
}

Rational binomial(long n, long k) {
  if (k < 0) return Rational(0);
  return rat_binomial(Rational(n), static_cast<unsigned>(k));
}

Poly falling_shifted(unsigned k, const Rational& c) {
  Poly acc(Rational(1));
  for (unsigned i = 0; i < k; ++i) acc *= Poly(std::vector<Rational>{c - i, Rational(1)});
  return acc;
}

Poly rising_shifted(unsigned k, const Rational& c) {
  Poly acc(Rational(1));
  for (unsigned i = 0; i < k; ++i) acc *= Poly(std::vector<Rational>{c + i, Rational(1)});
  return acc;
}

Poly falling_poly(unsigned k) { return falling_shifted(k, Rational(0)); }
Poly rising_poly(unsigned k) { return rising_shifted(k, Rational(0)); }

Rational stirling(StirlingKind kind, unsigned n, unsigned k) {
  if (k > n)
    throw std::out_of_range("stirling index out of range: n=" + std::to_string(n) +
                            " k=" + std::to_string(k));
  // Row-by-row triangle; n is small everywhere this is used.
  std::vector<Rational> row{Rational(1)};
  for (unsigned m = 1; m <= n; ++m) {
    std::vector<Rational> next(m + 1, Rational(0));
    for (unsigned j = 1; j <= m; ++j) {
      Rational below = j < m ? row[j] : Rational(0);
      if (kind == StirlingKind::first)
        next[j] = row[j - 1] - Rational(m - 1) * below;
      else
        next[j] = row[j - 1] + Rational(j) * below;
    }
    row = std::move(next);
  }
  return row[k];
}

Poly poly_reverse(const Poly& p, unsigned n) {
  if (p.degree() > std::size_t{n})
    throw std::domain_error("poly_reverse: degree " + p.degree().to_string() + " exceeds " +
                            std::to_string(n));
  std::vector<Rational> out(n + 1, Rational(0));
  for (unsigned k = 0; k <= n; ++k) out[k] = p.coeff(n - k);
  return Poly(std::move(out));
}

Poly one_minus_x_pow(unsigned k) {
  std::vector<Rational> out(k + 1);
  for (unsigned i = 0; i <= k; ++i) out[i] = (i % 2 ? -1 : 1) * binomial(k, i);
  return Poly(std::move(out));
}

Poly one_plus_x_pow(unsigned k) {
  std::vector<Rational> out(k + 1);
  for (unsigned i = 0; i <= k; ++i) out[i] = binomial(k, i);
  return Poly(std::move(out));
}

Poly divide_by_one_minus_x_pow(const Poly& p, unsigned m) {
  Poly q = p;
  for (unsigned step = 0; step < m; ++step) {
    if (q.is_zero()) return q;
    // q = (1-x) r  <=>  r_k = sum_{i<=k} q_i, and the full sum must vanish.
    std::vector<Rational> r(q.size() - 1);
    Rational acc = 0;
    for (std::size_t k = 0; k + 1 < q.size(); ++k) {
      acc += q.coeff(k);
      r[k] = acc;
    }
    acc += q.coeff(q.size() - 1);
    if (sgn(acc) != 0) throw std::domain_error("polynomial is not divisible by (1-x)");
    q = Poly(std::move(r));
  }
  return q;
}

}  // namespace eulnar
