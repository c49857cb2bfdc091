#include <doctest.h>

#include "eulnar/catalog.hpp"
#include "eulnar/combinatorics.hpp"
#include "eulnar/lagrange.hpp"
#include "eulnar/riordan.hpp"
#include "support.hpp"

using namespace eulnar;
using namespace testing;

namespace {

const std::vector<Rational> kGrid = {Q(-2), Q(-1), Q(-1, 2), Q(0), Q(1, 2), Q(1), Q(2), Q(3)};

}  // namespace

TEST_CASE("Lagrange associates of 1+x") {
  const std::size_t N = 8;
  Series c = lagrange_associate(onepx_series(N), Q(2));
  const std::vector<long> catalan = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
  for (std::size_t k = 0; k <= N; ++k) CHECK(c.coeff(k) == catalan[k]);
  CHECK(c == catalan_series(N));
  Series half = lagrange_associate(onepx_series(N), Q(1, 2));
  CHECK(half.coeff(0) == 1);
  CHECK(half.coeff(1) == 1);
  CHECK(half.coeff(2) == Q(1, 2));
  CHECK(half.coeff(3) == Q(1, 8));
  Series x = Series::x(N);
  Series root = (Series::one(N) + x * x / Series::constant(Q(4), N)).pow(Q(1, 2));
  Series closed = x.scaled(Q(1, 2)) + root;
  CHECK(half == closed * closed);
  CHECK(lagrange_associate(onepx_series(N), Q(1)) == geom_series(N));
}

TEST_CASE("beta zero leaves a^phi") {
  for (const auto& e : catalog(8)) {
    CHECK(lagrange_associate(e.series, Q(0)) == e.series);
    CHECK(lagrange_associate(e.series, Q(0), Q(3, 2)) == e.series.pow(Q(3, 2)));
  }
}

TEST_CASE("functional equation") {
  const std::size_t N = 10;
  for (const auto& e : catalog(N))
    for (const auto& beta : kGrid) {
      Series l = lagrange_associate(e.series, beta);
      CHECK(e.series.compose(l.pow(beta).times_x().truncated(N)) == l);
      Rational phi = Q(-3, 2);
      CHECK(lagrange_associate(e.series, beta, phi) == l.pow(phi));
    }
}

TEST_CASE("generalized binomial series") {
  const std::size_t N = 10;
  CHECK(generalized_binomial(Q(1), Q(1), N) == geom_series(N));
  CHECK(generalized_binomial(Q(2), Q(1), N) == catalan_series(N));
  CHECK(generalized_binomial(Q(3), Q(0), N) == Series::one(N));
  Series y = generalized_binomial(Q(-1), Q(1), N);
  CHECK(y * y - y == Series::x(N));
  for (const auto& beta : kGrid) {
    CHECK(generalized_binomial(beta, Q(1), N) == lagrange_associate(onepx_series(N), beta));
    CHECK(generalized_binomial(beta, Q(1), N) == genbinom_series(beta, N));
  }
}

TEST_CASE("closed forms of the numerator polynomials") {
  for (std::size_t n = 1; n <= 8; ++n) {
    Rational twon = factorial(static_cast<unsigned>(2 * n)) / factorial(static_cast<unsigned>(n));
    CHECK(gep_closed_form(Q(1), n) == Poly::x());
    CHECK(gep_closed_form(Q(0), n) == Poly::monomial(n, Q(1)));
    CHECK(gnp_closed_form(Q(1), n) == narayana_poly(n).scaled(factorial(static_cast<unsigned>(n + 1))));
    CHECK(gnp_closed_form(Q(2), n) == Poly::monomial(1, twon));
    CHECK(gnp_closed_form(Q(0), n) == Poly::monomial(n, twon));
  }
  CHECK(gep_closed_form(Q(1, 2), 2) == P({0, Q(1, 2), Q(1, 2)}));
  CHECK(gep_closed_form(Q(5), 0) == P({1}));
  CHECK(gnp_closed_form(Q(5), 0) == P({1}));
  for (std::size_t n = 0; n <= 6; ++n) {
    std::size_t ord = required_order(n);
    for (const auto& beta : kGrid) {
      SeriesPair p = make_pair(Series::one(ord), generalized_binomial(beta, Q(1), ord));
      CHECK(numerator(p, ArrayFlavor::ordinary, n).numerator == gep_closed_form(beta, n));
      CHECK(numerator(p, ArrayFlavor::exponential, n).numerator == gnp_closed_form(beta, n));
    }
  }
}

TEST_CASE("prefactor") {
  const std::size_t N = 10;
  Series b = Series::from_polynomial(P({2, 1}), N);
  CHECK(beta_prefactor(exp_series(N), b, Q(0)) == b);
  Series one = Series::one(N);
  Series l = lagrange_associate(onepx_series(N), Q(1));
  CHECK(beta_prefactor(onepx_series(N), one, Q(1)) == one + x_log_derivative(l));
  for (const auto& beta : kGrid) {
    Series a = onepx_series(N);
    Series lb = lagrange_associate(a, beta);
    Series lhs = lb * (one + x_log_derivative(lb.pow(beta - 1)));
    CHECK(lhs == one + x_log_derivative(lb.pow(beta)));
  }
  CHECK(x_log_derivative(geom_series(N)) == Series::x(N) * geom_series(N));
}

TEST_CASE("dual basis residual") {
  for (const auto& e : catalog(8))
    for (const auto& beta : kGrid) {
      CHECK(dual_basis_residual(e.series, beta, Q(1), 6).is_zero());
      CHECK(dual_basis_residual(e.series, beta, Q(-2, 3), 6).is_zero());
      CHECK(dual_basis_residual(e.series, beta, Q(0), 6).is_zero());
    }
}

TEST_CASE("inverse pairs") {
  CHECK(inverse_pair_check(onepx_series(12), Q(1), Q(1), 10));
  CHECK(inverse_pair_check(onepx_series(12), Q(1), Q(2), 10));
  for (const auto& e : catalog(12))
    for (auto [phi, beta] : std::vector<std::pair<Rational, Rational>>{{Q(3, 7), Q(-5, 3)}, {Q(2), Q(1, 2)}, {Q(-1), Q(3)}})
      CHECK(inverse_pair_check(e.series, phi, beta, 10));
}

TEST_CASE("exponential columns") {
  const std::size_t N = 8;
  Series g = exp_series(N) - Series::one(N);
  for (unsigned n = 0; n <= 4; ++n) {
    Series col = exponential_column(g, n);
    for (unsigned i = n; i <= N; ++i) CHECK(col.coeff(i) == stirling(StirlingKind::second, i, n));
  }
}
