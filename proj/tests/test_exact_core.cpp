#include <doctest.h>

#include "eulnar/combinatorics.hpp"
#include "support.hpp"

using namespace eulnar;
using namespace testing;

TEST_CASE("rationals are canonical") {
  CHECK(to_string(make_rational(6, 4)) == "3/2");
  CHECK(to_string(make_rational(3, -6)) == "-1/2");
  CHECK(to_string(make_rational(-8, 4)) == "-2");
  CHECK(to_string(Q(0, 5)) == "0");
  CHECK(parse_rational("-7/21") == Q(-1, 3));
  CHECK(parse_rational("12") == Q(12));
  CHECK(parse_rational("012") == Q(12));
  CHECK(parse_rational("09/010") == Q(9, 10));
  CHECK_FALSE(parse_rational("1/0"));
  CHECK_FALSE(parse_rational("abc"));
  CHECK_FALSE(parse_rational(""));
  CHECK_FALSE(parse_rational("1/"));
  CHECK(factorial(0) == 1);
  CHECK(factorial(6) == 720);
  CHECK(power(Q(2, 3), 3) == Q(8, 27));
  CHECK(power(Q(-5), 0) == 1);
  CHECK(as_long(Q(14, 7)) == 2L);
  CHECK_FALSE(as_long(Q(1, 2)));
}

TEST_CASE("generalized binomial coefficients") {
  CHECK(rat_binomial(Q(4), 2) == 6);
  CHECK(rat_binomial(Q(-2), 1) == -2);
  CHECK(rat_binomial(Q(5, 2), 3) == Q(5, 16));
  CHECK(rat_binomial(Q(1, 2), 2) == Q(-1, 8));
  CHECK(rat_binomial(Q(3), 5) == 0);
  CHECK(binomial(-3, 2) == 6);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(2, 5) == 0);
  for (long n = 0; n <= 10; ++n)
    for (long k = 1; k <= n; ++k) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
  for (long n = -6; n <= 6; ++n)
    for (unsigned k = 0; k <= 6; ++k) CHECK(rat_binomial(Q(n), k) == binomial(n, static_cast<long>(k)));
}

TEST_CASE("falling and rising factorials") {
  CHECK(falling_poly(0) == P({1}));
  CHECK(falling_poly(2) == P({0, -1, 1}));
  CHECK(rising_poly(3).evaluate(Q(1)) == 6);
  CHECK(rising_poly(3) == P({0, 2, 3, 1}));
  for (unsigned k = 0; k <= 6; ++k) {
    CHECK(rising_poly(k) == falling_poly(k).compose(P({0, -1})).scaled(k % 2 ? Q(-1) : Q(1)));
    CHECK(falling_shifted(k, Q(3, 2)) == falling_poly(k).shifted(Q(3, 2)));
    CHECK(rising_shifted(k, Q(-2)) == rising_poly(k).shifted(Q(-2)));
  }
}

TEST_CASE("Stirling numbers") {
  CHECK(stirling(StirlingKind::first, 3, 1) == 2);
  CHECK(stirling(StirlingKind::first, 3, 2) == -3);
  CHECK(stirling(StirlingKind::second, 4, 2) == 7);
  for (unsigned n = 0; n <= 8; ++n) {
    CHECK(stirling(StirlingKind::second, n, n) == 1);
    for (unsigned k = 0; k <= n; ++k) CHECK(stirling(StirlingKind::first, n, k) == falling_poly(n).coeff(k));
  }
  for (unsigned n = 0; n <= 7; ++n)
    for (unsigned j = 0; j <= n; ++j) {
      Rational sum = 0;
      for (unsigned k = j; k <= n; ++k) sum += stirling(StirlingKind::second, n, k) * stirling(StirlingKind::first, k, j);
      CHECK(sum == (n == j ? 1 : 0));
    }
  CHECK_THROWS_AS(stirling(StirlingKind::first, 2, 3), std::out_of_range);
}

TEST_CASE("coefficient reversal") {
  CHECK(poly_reverse(P({0, 1, 4, 1}), 4) == P({0, 1, 4, 1}));
  CHECK(poly_reverse(P({0, 1, 4, 1}), 5) == P({0, 0, 1, 4, 1}));
  CHECK(poly_reverse(P({1}), 3) == Poly::monomial(3, Q(1)));
  for (unsigned n = 0; n <= 6; ++n) {
    Poly p = falling_poly(n).shifted(Q(2));
    CHECK(poly_reverse(poly_reverse(p, n), n) == p);
  }
  CHECK_THROWS_AS(poly_reverse(P({0, 0, 1}), 1), std::domain_error);
}

TEST_CASE("division by powers of 1-x") {
  CHECK(one_minus_x_pow(2) == P({1, -2, 1}));
  CHECK(one_plus_x_pow(3) == P({1, 3, 3, 1}));
  Poly p = P({2, 5, -1});
  CHECK(divide_by_one_minus_x_pow(p * one_minus_x_pow(3), 3) == p);
  CHECK_THROWS_AS(divide_by_one_minus_x_pow(P({1, 1}), 1), std::domain_error);
}

TEST_CASE("polynomial algebra") {
  Poly x = Poly::x();
  CHECK(str(x + (x * x).scaled(Q(11))) == "x + 11x^2");
  CHECK((P({1, 1}) * P({1, 1})) == P({1, 2, 1}));
  CHECK(P({1, 2, 1}).shifted(Q(-1)) == P({0, 0, 1}));
  CHECK(P({0, 0, 3}).shifted_down(2) == P({3}));
  CHECK_THROWS_AS(P({1, 0, 3}).shifted_down(1), std::domain_error);
  CHECK(P({1, 1}).shifted_up(2) == P({0, 0, 1, 1}));
  CHECK(P({1, 2}).compose(P({0, 0, 1})) == P({1, 0, 2}));
  CHECK(P({1, -3, 2}).evaluate(Q(1, 2)) == 0);
  CHECK(P({5, 0, 0}).size() == 1);
  CHECK(Poly().is_zero());
  CHECK(Poly().degree().is_minus_infinity());
  CHECK(P({0, 1, 3}).derivative() == P({1, 6}));
}

TEST_CASE("series arithmetic") {
  const std::size_t N = 12;
  Series x = Series::x(N);
  Series geom = (Series::one(N) - x).inverse();
  CHECK((Series::one(N) - x) * geom == Series::one(N));
  Series onepx = Series::one(N) + x;
  CHECK((onepx * onepx) / onepx == onepx);
  Series e = x.exp();
  Series e2 = e * e;
  for (std::size_t k = 0; k <= N; ++k) CHECK(e2.coeff(k) == power(Q(2), static_cast<unsigned>(k)) / factorial(static_cast<unsigned>(k)));
  CHECK_THROWS_AS(e.coeff(N + 1), std::out_of_range);
  CHECK_THROWS_AS(e.truncated(N + 1), std::invalid_argument);
  CHECK(e.derivative().order() == N - 1);
  CHECK(e.derivative().agrees_with(e));
  CHECK(e.times_x().divide_by_x() == e);
}

TEST_CASE("composition and reversion") {
  const std::size_t N = 12;
  Series x = Series::x(N);
  Series one = Series::one(N);
  Series log1p = (one + x).log();
  CHECK(x.exp().compose(log1p) == one + x);
  CHECK(Series::from_polynomial(P({1, 2, 3}), N).compose(x) == Series::from_polynomial(P({1, 2, 3}), N));
  Series geom = (one - x).inverse();
  Series row_sums = geom * geom.compose(x * geom);
  for (std::size_t k = 0; k <= N; ++k) CHECK(row_sums.coeff(k) == power(Q(2), static_cast<unsigned>(k)));
  CHECK((x * geom).reversion() == x * (one + x).inverse());
  Series c = (x * (one - x)).reversion();
  std::vector<Rational> catalan{1};
  for (std::size_t n = 0; n < N; ++n) {
    Rational s = 0;
    for (std::size_t i = 0; i <= n; ++i) s += catalan[i] * catalan[n - i];
    catalan.push_back(s);
  }
  for (std::size_t k = 1; k <= N; ++k) CHECK(c.coeff(k) == catalan[k - 1]);
  CHECK(log1p.reversion() == x.exp() - one);
  CHECK_THROWS_AS(geom.reversion(), std::domain_error);
  CHECK_THROWS_AS(geom.compose(geom), std::domain_error);
}

TEST_CASE("log, exp and rational powers") {
  const std::size_t N = 10;
  Series x = Series::x(N);
  Series one = Series::one(N);
  Series p = (one + x).pow(Q(-2));
  CHECK(p.coeff(0) == 1);
  CHECK(p.coeff(1) == -2);
  CHECK(p.coeff(2) == 3);
  CHECK(p.coeff(3) == -4);
  CHECK(x.exp().log() == x);
  Series r = (one - x.scaled(Q(4))).pow(Q(1, 2));
  CHECK(r * r == one - x.scaled(Q(4)));
  CHECK(r.coeff(1) == -2);
  CHECK(r.coeff(2) == -2);
  CHECK(r.coeff(3) == -4);
  Series g = (one - x).inverse();
  CHECK(g.pow(3u) == g.pow(Q(3)));
  CHECK_THROWS_AS(x.log(), std::domain_error);
  CHECK_THROWS_AS(one.exp(), std::domain_error);
}

TEST_CASE("Sheffer rows") {
  const std::size_t N = 7;
  Series x = Series::x(N + 1);
  Series one = Series::one(N + 1);
  auto rows = sheffer_rows(one, x, N);
  for (std::size_t n = 0; n <= N; ++n) CHECK(rows[n] == Poly::monomial(n, Q(1)));
  auto rising = sheffer_rows(one, (one - x).inverse().log(), N);
  for (std::size_t n = 0; n <= N; ++n) CHECK(rising[n] == rising_poly(static_cast<unsigned>(n)));
  Series b = Series::from_polynomial(P({3, 1}), N + 1);
  CHECK(sheffer_rows(b, x, N)[0] == P({3}));
}
