#include <doctest.h>

#include "eulnar/catalog.hpp"
#include "eulnar/combinatorics.hpp"
#include "eulnar/gf_check.hpp"
#include "eulnar/riordan.hpp"
#include "support.hpp"

using namespace eulnar;
using namespace testing;

namespace {

/// (1-x)^e sum_{m<=order} f(m) x^m, truncated at degree bound.
template <class F>
Poly numerator_oracle(F f, unsigned e, std::size_t order, std::size_t bound) {
  std::vector<Rational> c(order + 1);
  for (std::size_t m = 0; m <= order; ++m) c[m] = f(Rational(m));
  Poly prod = Poly(c) * one_minus_x_pow(e);
  std::vector<Rational> out;
  for (std::size_t k = 0; k <= bound; ++k) out.push_back(prod.coeff(k));
  return Poly(out);
}

}  // namespace

TEST_CASE("columns of square arrays") {
  const std::size_t N = 8;
  Series one = Series::one(N);
  SeriesPair inv = make_pair(one, (one + Series::x(N)).inverse());
  Series c2 = column(inv, ArrayFlavor::ordinary, 2);
  CHECK(c2.coeff(0) == 1);
  CHECK(c2.coeff(1) == -2);
  CHECK(c2.coeff(2) == 3);
  CHECK(c2.coeff(3) == -4);
  CHECK(column(make_pair(one, exp_series(N)), ArrayFlavor::ordinary, 0) == one);
  CHECK_THROWS_AS(make_pair(Series::x(N), exp_series(N)), std::domain_error);
  CHECK_THROWS_AS(make_pair(one, geom_series(N).scaled(Q(2))), std::domain_error);
}

TEST_CASE("Riordan triangle of (1+x, x(1+x))") {
  const std::size_t N = 6;
  SeriesPair p = make_pair(onepx_series(N), onepx_series(N));
  const std::vector<std::vector<long>> rows = {{1}, {1, 1}, {0, 2, 1}, {0, 1, 3, 1}, {0, 0, 3, 4, 1}, {0, 0, 1, 6, 5, 1},
                                               {0, 0, 0, 4, 10, 6, 1}};
  for (std::size_t m = 0; m <= N; ++m) {
    Series col = riordan_column(p, ArrayFlavor::ordinary, m);
    for (std::size_t k = 0; k <= N; ++k) CHECK(col.coeff(k) == (k < m ? 0 : rows[k][m]));
  }
}

TEST_CASE("rows of (b, a-1)") {
  const std::size_t N = 6;
  Series one = Series::one(N);
  for (std::size_t n = 0; n <= N; ++n) CHECK(square_row(make_pair(one, onepx_series(N)), n) == Poly::monomial(n, Q(1)));
  Series b = Series::from_polynomial(P({5, 1}), N);
  CHECK(square_row(make_pair(b, exp_series(N)), 0) == P({5}));
  Poly v3 = square_row(make_pair(one, exp_series(N)), 3);
  for (unsigned m = 0; m <= 3; ++m) CHECK(v3.coeff(m) == factorial(m) * stirling(StirlingKind::second, 3, m) / 6);
}

TEST_CASE("diagonal series") {
  const std::size_t N = 10;
  Series one = Series::one(N);
  Series d2 = diagonal_series(make_pair(one, exp_series(N)), ArrayFlavor::ordinary, 2, N);
  for (std::size_t m = 0; m <= N; ++m) CHECK(d2.coeff(m) == Rational(m * m) / 2);
  Series d0 = diagonal_series(make_pair(one, catalan_series(N)), ArrayFlavor::ordinary, 0, N);
  CHECK(d0 == geom_series(N));
  Series g2 = diagonal_series(make_pair(one, geom_series(N)), ArrayFlavor::exponential, 2, N);
  for (std::size_t m = 0; m <= N; ++m) {
    Rational mm(m);
    CHECK(g2.coeff(m) == (mm + 1) * (mm + 2) * mm * (mm + 1) / 2);
  }
  CHECK(g2.coeff(1) == 6);
  CHECK(g2.coeff(2) == 36);
  CHECK(g2.coeff(3) == 120);
}

TEST_CASE("numerator polynomials") {
  for (std::size_t n = 0; n <= 8; ++n) {
    std::size_t ord = required_order(n);
    Series one = Series::one(ord);
    NumeratorResult e = numerator(make_pair(one, exp_series(ord)), ArrayFlavor::ordinary, n);
    CHECK(e.residual_ok);
    CHECK(e.denominator_exponent == n + 1);
    Poly oracle = numerator_oracle([n](const Rational& m) { return power(m, static_cast<unsigned>(n)); },
                                   static_cast<unsigned>(n + 1), 3 * n + 4, n);
    CHECK(e.numerator.scaled(factorial(static_cast<unsigned>(n))) == oracle);
    CHECK(euler_poly(n) == oracle);
    if (n > 0) CHECK(euler_poly(n).evaluate(Q(1)) == factorial(static_cast<unsigned>(n)));

    NumeratorResult g = numerator(make_pair(one, geom_series(ord)), ArrayFlavor::exponential, n);
    CHECK(g.residual_ok);
    CHECK(g.denominator_exponent == 2 * n + 1);
    CHECK(g.numerator == narayana_poly(n).scaled(factorial(static_cast<unsigned>(n + 1))));

    NumeratorResult o = numerator(make_pair(one, onepx_series(ord)), ArrayFlavor::ordinary, n);
    CHECK(o.numerator == Poly::monomial(n, Q(1)));
  }
  CHECK(euler_poly(4) == P({0, 1, 11, 11, 1}));
  CHECK(euler_poly(3) == P({0, 1, 4, 1}));
  CHECK(narayana_poly(3) == P({0, 1, 3, 1}));
  CHECK(narayana_b_poly(2) == P({1, 4, 1}));
}

TEST_CASE("fast and materialized numerators agree") {
  for (const auto& e : catalog(required_order(5) + 5)) {
    for (std::size_t n = 0; n <= 5; ++n) {
      std::size_t need = required_order(n) + n;
      Series a = e.series.truncated(need);
      Series b = Series::from_polynomial(P({1, -1, 2}), need);
      for (auto flavor : {ArrayFlavor::ordinary, ArrayFlavor::exponential}) {
        NumeratorResult fast = numerator(make_pair(b, a), flavor, n);
        NumeratorResult slow = materialized_numerator(b, a.times_x().truncated(need), flavor, n);
        CHECK(fast.residual_ok);
        CHECK(slow.residual_ok);
        CHECK(fast.numerator == slow.numerator);
      }
    }
  }
}

TEST_CASE("Pascal powers") {
  FiniteOperator p = pascal_power(Q(1), 4);
  CHECK(p == M(1, {{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 3, 3, 1}}));
  CHECK(pascal_power(Q(0), 5) == FiniteOperator::identity(5));
  CHECK(pascal_power(Q(1, 2), 6) * pascal_power(Q(1, 2), 6) == pascal_power(Q(1), 6));
  CHECK(pascal_power(Q(-1), 6) == pascal_power(Q(1), 6).inverse());
}

TEST_CASE("Riordan group operations") {
  const std::size_t N = 10;
  Series x = Series::x(N);
  Series one = Series::one(N);
  Series f = geom_series(N);
  Series g = x * exp_series(N);
  auto [fi, gi] = riordan_inverse(f, g);
  auto [pf, pg] = riordan_product(f, g, fi, gi);
  CHECK(pf == one);
  CHECK(pg == x);
}

TEST_CASE("Narayana generating function") {
  std::string why;
  CHECK(gnp_generating_check(geom_series(20), 6, &why));
  CHECK(gnp_generating_check(exp_series(20), 5, &why));
  CHECK(gnp_generating_check(onepx_series(20), 6, &why));
  PolySeries closed = narayana_closed_form_gf(6);
  for (std::size_t n = 0; n <= 6; ++n) CHECK(closed.coeff(n) == narayana_poly(n));
  for (std::size_t n = 0; n <= 6; ++n) CHECK(closed.coeff(n).size() <= n + 1);
}
