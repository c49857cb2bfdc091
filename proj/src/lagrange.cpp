#include "eulnar/lagrange.hpp"

#include <stdexcept>

#include "eulnar/catalog.hpp"
#include "eulnar/combinatorics.hpp"
#include "eulnar/riordan.hpp"

namespace eulnar {

Series lagrange_associate(const Series& a, const Rational& beta, const Rational& phi) {
  if (a.coeff(0) != 1) throw std::domain_error("lagrange_associate: a(0) must be 1");
  std::size_t N = a.order();
  std::vector<Poly> u = sheffer_rows(Series::one(N), a.log(), N);
  std::vector<Rational> c(N + 1);
  c[0] = 1;
  for (std::size_t n = 1; n <= N; ++n) {
    Poly reduced = u[n].shifted_down(1);
    c[n] = phi * reduced.evaluate(phi + Rational(n) * beta) / factorial(static_cast<unsigned>(n));
  }
  return Series(std::move(c), N);
}

Series generalized_binomial(const Rational& beta, const Rational& phi, std::size_t order) {
  return genbinom_series(beta, order, phi);
}

Poly gep_closed_form(const Rational& beta, std::size_t n) {
  if (n == 0) return Poly(Rational(1));
  std::vector<Rational> c(n + 1, Rational(0));
  Rational nr(n);
  for (std::size_t m = 1; m <= n; ++m)
    c[m] = rat_binomial(nr * (1 - beta), static_cast<unsigned>(m - 1)) *
           rat_binomial(nr * beta, static_cast<unsigned>(n - m)) / nr;
  return Poly(std::move(c));
}

Poly gnp_closed_form(const Rational& beta, std::size_t n) {
  if (n == 0) return Poly(Rational(1));
  std::vector<Rational> c(n + 1, Rational(0));
  Rational nr(n);
  Rational pre = factorial(static_cast<unsigned>(n + 1)) / nr;
  for (std::size_t m = 1; m <= n; ++m)
    c[m] = pre * rat_binomial(nr * (2 - beta), static_cast<unsigned>(m - 1)) *
           rat_binomial(nr * beta, static_cast<unsigned>(n - m));
  return Poly(std::move(c));
}

Series x_log_derivative(const Series& f) { return (f.derivative() / f.truncated(f.order() - 1)).times_x(); }

Series beta_prefactor(const Series& a, const Series& b, const Rational& beta) {
  Series assoc = lagrange_associate(a, beta);
  Series assoc_beta = lagrange_associate(a, beta, beta);
  Series outer = b.compose(assoc_beta.times_x().truncated(assoc_beta.order()));
  return outer * (Series::one(a.order()) + x_log_derivative(assoc).scaled(beta));
}

Series exponential_column(const Series& g, std::size_t n) {
  Series p = g.pow(static_cast<unsigned>(n));
  std::vector<Rational> c(p.order() + 1);
  for (std::size_t i = 0; i <= p.order(); ++i)
    c[i] = p.coeff(i) * factorial(static_cast<unsigned>(i)) / factorial(static_cast<unsigned>(n));
  return Series(std::move(c), p.order());
}

Series dual_basis_residual(const Series& a, const Rational& beta, const Rational& phi, std::size_t N) {
  if (a.order() < N) throw std::domain_error("dual_basis_residual: series order below N");
  Series base = a.truncated(N);
  Series q = base.log().reversion();
  std::vector<Poly> u = sheffer_rows(Series::one(N), lagrange_associate(base, beta).log(), N);
  Series sum = Series::zero(N);
  for (std::size_t n = 0; n <= N; ++n) {
    Rational nb = Rational(n) * beta;
    Series denom({Rational(1), nb}, N);  // 1 + n beta x
    Series inner = Series::x(N) / denom;
    Series qn = exponential_column(q, n).compose(inner) / denom;
    sum += qn.scaled(u[n].evaluate(phi));
  }
  Series geometric = Series({Rational(1), -phi}, N).inverse();
  return sum - geometric;
}

bool inverse_pair_check(const Series& a, const Rational& phi, const Rational& beta, std::size_t N) {
  if (a.order() < N) throw std::domain_error("inverse_pair_check: series order below N");
  Series base = a.truncated(N);
  Series one = Series::one(N);
  Series x = Series::x(N);
  Series g1 = (x * lagrange_associate(base, beta, phi));
  Series g2 = (x * lagrange_associate(base, beta - phi, -phi));
  if (!(g1.compose(g2) == x) || !(g2.compose(g1) == x)) return false;
  Series f1 = one + x_log_derivative(lagrange_associate(base, beta)).scaled(phi);
  Series f2 = one - x_log_derivative(lagrange_associate(base, beta - phi)).scaled(phi);
  auto [pf, pg] = riordan_product(f1, g1, f2, g2);
  return pf == one && pg == x;
}

}  // namespace eulnar
