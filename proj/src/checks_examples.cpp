#include "checks.hpp"
#include "eulnar/catalog.hpp"
#include "eulnar/combinatorics.hpp"
#include "eulnar/lagrange.hpp"
#include "eulnar/transforms.hpp"

namespace eulnar::detail {

namespace {

using F = ArrayFlavor;
using Triangle = std::vector<std::vector<long>>;

const Triangle kOnePlusXExp = {{1}, {1, 1}, {0, 2, 1}, {0, 1, 3, 1}, {0, 0, 3, 4, 1}, {0, 0, 1, 6, 5, 1},
                               {0, 0, 0, 4, 10, 6, 1}};
const Triangle kCatalanLogExp = {{1}, {1, 1}, {3, 2, 1}, {10, 6, 3, 1}, {35, 20, 10, 4, 1}, {126, 70, 35, 15, 5, 1}};
const Triangle kCatalanDerivative = {{1},           {2, 1},           {6, 3, 1},
                                     {20, 10, 4, 1}, {70, 35, 15, 5, 1}, {252, 126, 56, 21, 6, 1}};
const Triangle kCatalanLogInverse = {{1}, {1, 1}, {3, 0, 1}, {10, 1, -1, 1}, {35, 4, 0, -2, 1}, {126, 15, 1, 0, -3, 1}};
const Triangle kOnePlusXDerivative = {{1},          {2, 1},          {0, 3, 1},           {0, 2, 4, 1},
                                      {0, 0, 5, 5, 1}, {0, 0, 2, 9, 6, 1}, {0, 0, 0, 7, 14, 7, 1}};
const Triangle kOnePlusXLogInverse = {{1},           {1, 1},             {-1, 0, 1},           {1, -1, -1, 1},
                                      {-1, 2, 0, -2, 1}, {1, -3, 2, 2, -3, 1}, {-1, 4, -5, 0, 5, -4, 1}};

Rational fact(std::size_t k) { return factorial(static_cast<unsigned>(k)); }
Rational sign(std::size_t k) { return k % 2 ? Rational(-1) : Rational(1); }
Poly mono(std::size_t p, Rational c = 1) { return Poly::monomial(p, std::move(c)); }
Poly linear(const Rational& c0, const Rational& c1) { return Poly(std::vector<Rational>{c0, c1}); }
Rational power(const Rational& base, std::size_t k) {
  Rational r = 1;
  for (std::size_t i = 0; i < k; ++i) r *= base;
  return r;
}

Poly numer(Recorder& rec, const std::string& where, const Series& b, const Series& a, F flavor, std::size_t n) {
  NumeratorResult r = numerator(make_pair(b, a), flavor, n, rec.params().guard);
  rec.residual(where + " residual", r);
  return r.numerator;
}

/// (x a)'
Series derivative_of_xa(const Series& a) { return a.times_x().derivative(); }
/// 1 + x (log f)'
Series one_plus_xlog(const Series& f) { return Series::one(f.order()) + x_log_derivative(f); }
/// f(-x)
Series reflect(const Series& f) { return f.compose(-Series::x(f.order())); }
/// c with (1, x c) the compositional inverse of (1, x a).
Series inverse_companion(const Series& a) { return a.times_x().truncated(a.order()).reversion().divide_by_x(); }

void compare_triangle(Recorder& rec, const std::string& name, const SeriesPair& pair, F flavor, const Triangle& t) {
  for (std::size_t m = 0; m < t.size(); ++m) {
    Series col = riordan_column(pair, flavor, m);
    for (std::size_t k = m; k < t.size(); ++k) {
      Rational v = col.coeff(k);
      if (flavor == F::exponential) v *= fact(m) / fact(k);
      rec.equal(name + " entry (" + std::to_string(k) + "," + std::to_string(m) + ")", v, Rational(t[k][m]));
    }
  }
}

void ex1(Recorder& rec) {
  const CheckParams& par = rec.params();
  std::size_t order = pipeline_order(par, par.max_n) + 1;
  for (std::size_t n = 0; n <= par.matrix_bound(); ++n)
    rec.equal(tag("F [x+n+1]_n", n), build({Family::F, n}).apply(rising_shifted(static_cast<unsigned>(n), Rational(n + 1))),
              Poly(fact(2 * n) / fact(n)));
  for (const auto& e : catalog(order)) {
    Series a = e.series.truncated(order - 1);
    Series b = derivative_of_xa(e.series);
    std::vector<Poly> u = sheffer_rows(Series::one(order), e.series.log(), par.max_n);
    std::vector<Poly> rows_log = sheffer_rows(one_plus_xlog(e.series), e.series.log(), par.max_n);
    std::vector<Poly> rows_derivative = sheffer_rows(b, a.log(), par.max_n);
    for (std::size_t n = 1; n <= par.max_n; ++n) {
      std::string where = tag(e.name, n);
      Poly phi = numer(rec, where, Series::one(order - 1), a, F::exponential, n);
      Poly alpha = numer(rec, where, Series::one(order - 1), a, F::ordinary, n);
      rec.equal(where + " ((xa)', xa) exponential", numer(rec, where, b, a, F::exponential, n), phi.shifted_down(1));
      rec.equal(where + " (a, xa) ordinary", numer(rec, where, a, a, F::ordinary, n), alpha.shifted_down(1));
      Poly ut = u[n].shifted_down(1);
      rec.equal(where + " row of (1+x(log a)', log a)", rows_log[n], linear(Rational(n), 1) * ut);
      rec.equal(where + " row of ((xa)', log a)", rows_derivative[n],
                linear(Rational(n + 1), 1) * ut.shifted(Rational(1)));
    }
  }
  Series c = catalan_series(order);
  std::vector<Poly> u = sheffer_rows(Series::one(order), c.log(), par.max_n);
  for (std::size_t n = 1; n <= par.max_n; ++n) {
    rec.equal(tag("catalan phi~", n), numer(rec, tag("catalan", n), derivative_of_xa(c), c.truncated(order - 1), F::exponential, n),
              Poly(fact(2 * n) / fact(n)));
    rec.equal(tag("catalan u~", n), u[n].shifted_down(1),
              rising_shifted(static_cast<unsigned>(n - 1), Rational(n + 1)));
  }
}

void ex2(Recorder& rec) {
  const CheckParams& par = rec.params();
  std::size_t order = pipeline_order(par, par.max_n) + 1;
  Series onepx = onepx_series(order);
  Series cat = catalan_series(order);
  for (std::size_t n = 1; n <= par.max_n; ++n) {
    Poly expected = (linear(1, 1) * mono(n - 1)).scaled(fact(2 * n) / (fact(n) * 2));
    rec.equal(tag("B phi | 1+x", n), numer(rec, tag("1+x", n), onepx, onepx, F::exponential, n), expected);
    rec.equal(tag("S x^(n-1)", n), build({Family::S, n}).column(n - 1), expected);
    rec.equal(tag("(1+x(log C)', xC) exponential", n),
              numer(rec, tag("catalan", n), one_plus_xlog(cat), cat, F::exponential, n),
              linear(1, 1).scaled(fact(2 * n) / (fact(n) * 2)));
  }
  compare_triangle(rec, "(1+x, x(1+x)) exponential", make_pair(onepx, onepx), F::exponential, kOnePlusXExp);
  compare_triangle(rec, "(1+x(log C)', xC) exponential", make_pair(one_plus_xlog(cat), cat), F::exponential,
                   kCatalanLogExp);
  rec.equal("lagrange(1+x, -1, -1) = C(-x)", lagrange_associate(onepx, -1, -1), reflect(cat));
  for (const auto& e : catalog(order)) {
    Series a = e.series.truncated(order - 1);
    Series b = derivative_of_xa(e.series);
    Series inv = one_plus_xlog(a);
    Series c = inverse_companion(e.series).truncated(order - 1);
    std::vector<Poly> u = sheffer_rows(Series::one(order), e.series.log(), par.max_n);
    for (std::size_t n = 1; n <= par.max_n; ++n) {
      std::string where = tag(e.name, n);
      Poly b_alpha = numer(rec, where, b, a, F::ordinary, n);
      rec.equal(where + " B alpha inverse", numer(rec, where, inv, a.inverse(), F::ordinary, n),
                poly_reverse(b_alpha, static_cast<unsigned>(n)).scaled(sign(n)));
      Poly b_phi = numer(rec, where, a, a, F::exponential, n);
      rec.equal(where + " BF u_n", build({Family::BF, n}).apply(u[n]), b_phi);
      rec.equal(where + " F u_n(x+1)", build({Family::F, n}).apply(u[n].shifted(Rational(1))), b_phi);
      rec.equal(where + " B phi inverse", numer(rec, where, one_plus_xlog(c), c, F::exponential, n),
                poly_reverse(b_phi, static_cast<unsigned>(n)).scaled(sign(n)));
      rec.equal(where + " F u_n(-x-n)", build({Family::F, n}).apply(u[n].compose(linear(-Rational(n), -1))),
                poly_reverse(b_phi, static_cast<unsigned>(n)).scaled(sign(n)));
    }
  }
  for (std::size_t n = 1; n <= par.max_n; ++n)
    rec.equal(tag("BF x^n", n), build({Family::BF, n}).column(n),
              numer(rec, tag("exp", n), exp_series(order), exp_series(order), F::exponential, n));
  for (const Rational& beta : {Rational(1), Rational(2), make_rational(-1, 2), Rational(3)}) {
    Series a = Series::from_polynomial(linear(1, -beta), order).inverse();
    for (std::size_t n = 1; n <= par.max_n; ++n) {
      Poly b_phi = numer(rec, tag("1/(1-" + to_string(beta) + "x)", n), a, a, F::exponential, n);
      rec.equal(tag("B phi | 1/(1-beta x)", n, beta), b_phi, narayana_b_poly(n).scaled(power(beta, n) * fact(n)));
      rec.equal(tag("symmetric", n, beta), b_phi, poly_reverse(b_phi, static_cast<unsigned>(n)));
    }
  }
}

void ex3(Recorder& rec) {
  const CheckParams& par = rec.params();
  std::size_t order = pipeline_order(par, par.max_n) + 1;
  Series cat = catalan_series(order);
  Series b = derivative_of_xa(cat);
  Series a = cat.truncated(order - 1);
  Series inv_b = one_plus_xlog(a);
  Series inv_a = a.inverse();
  for (std::size_t n = 1; n <= par.max_n; ++n) {
    long nn = static_cast<long>(n);
    std::vector<Rational> closed(n + 1), closed_inverse(n + 1);
    for (long m = 0; m <= nn; ++m) {
      closed[m] = binomial(-nn, m) * binomial(2 * nn, nn - m);
      closed_inverse[m] = sign(n) * binomial(2 * nn, m) * binomial(-nn, nn - m);
    }
    Poly b_alpha = numer(rec, tag("catalan", n), b, a, F::ordinary, n);
    rec.equal(tag("B alpha | C", n), b_alpha, Poly(closed));
    rec.equal(tag("(2n)!/n! S^-1 x^0", n), build({Family::Sinv, n}).column(0).scaled(fact(2 * n) / fact(n)), Poly(closed));
    rec.equal(tag("(1+x(log C)', x/C) numerators", n), numer(rec, tag("catalan inverse", n), inv_b, inv_a, F::ordinary, n),
              Poly(closed_inverse));
  }
  compare_triangle(rec, "((xC)', xC)", make_pair(b, a), F::ordinary, kCatalanDerivative);
  compare_triangle(rec, "(1+x(log C)', x/C)", make_pair(inv_b, inv_a), F::ordinary, kCatalanLogInverse);
}

void ex4(Recorder& rec) {
  const CheckParams& par = rec.params();
  std::size_t order = pipeline_order(par, par.max_n) + 1;
  Series onepx = onepx_series(order);
  Series b = derivative_of_xa(onepx);
  Series a = onepx.truncated(order - 1);
  Series inv_b = one_plus_xlog(a);
  Series inv_a = a.inverse();
  for (std::size_t n = 1; n <= par.max_n; ++n) {
    rec.equal(tag("phi~ | 1+x", n), numer(rec, tag("1+x", n), b, a, F::exponential, n), mono(n - 1, fact(2 * n) / fact(n)));
    Poly expected = linear(2, -1) * mono(n - 1);
    rec.equal(tag("B alpha | 1+x", n), numer(rec, tag("1+x", n), b, a, F::ordinary, n), expected);
    rec.equal(tag("(2n)!/n! S^-1 x^(n-1)", n), build({Family::Sinv, n}).column(n - 1).scaled(fact(2 * n) / fact(n)),
              expected);
    rec.equal(tag("(1+x(log(1+x))', x/(1+x)) numerators", n),
              numer(rec, tag("1+x inverse", n), inv_b, inv_a, F::ordinary, n), linear(-1, 2).scaled(sign(n)));
  }
  compare_triangle(rec, "((x(1+x))', x(1+x))", make_pair(b, a), F::ordinary, kOnePlusXDerivative);
  compare_triangle(rec, "(1+x(log(1+x))', x/(1+x))", make_pair(inv_b, inv_a), F::ordinary, kOnePlusXLogInverse);
}

void ex5(Recorder& rec) {
  const CheckParams& par = rec.params();
  std::size_t order = pipeline_order(par, par.max_n) + 1;
  Series geom = geom_series(order);
  Series b = derivative_of_xa(geom);
  Series a = geom.truncated(order - 1);
  Series one_minus_x = Series::from_polynomial(one_minus_x_pow(1), order - 1);
  for (std::size_t n = 1; n <= par.max_n; ++n) {
    std::size_t span = order - 1 - n;
    Series closed = (one_minus_x.pow(static_cast<unsigned>(n + 1)).truncated(span + 1).inverse() -
                     Series::one(span + 1))
                        .divide_by_x();
    rec.equal(tag("((x/(1-x))', x/(1-x)) diagonal", n), diagonal_series(make_pair(b, a), F::ordinary, n, span), closed);
    Poly b_alpha = (Poly(Rational(1)) - one_minus_x_pow(static_cast<unsigned>(n + 1))).shifted_down(1);
    rec.equal(tag("B alpha | 1/(1-x)", n), numer(rec, tag("geom", n), b, a, F::ordinary, n), b_alpha);
    rec.equal(tag("(1/(1-x), x(1-x)) numerators", n), numer(rec, tag("geom companion", n), a, one_minus_x, F::ordinary, n),
              one_minus_x_pow(static_cast<unsigned>(n + 1)) + mono(n + 1, sign(n)));
  }
}

void ex6(Recorder& rec) {
  const CheckParams& par = rec.params();
  std::size_t order = pipeline_order(par, par.max_n) + 1;
  Series e = exp_series(order);
  Series b = derivative_of_xa(e);
  Series a = e.truncated(order - 1);
  for (std::size_t n = 1; n <= par.max_n; ++n) {
    std::size_t span = order - 1 - n;
    std::vector<Rational> diag(span + 1);
    for (std::size_t m = 0; m <= span; ++m)
      diag[m] = (power(Rational(m + 1), n) + Rational(n) * power(Rational(m + 1), n - 1)) / fact(n);
    rec.equal(tag("((x e^x)', x e^x) diagonal", n), diagonal_series(make_pair(b, a), F::ordinary, n, span),
              Series(diag, span));
    Poly at = euler_poly(n).shifted_down(1);
    Poly at_prev = n == 1 ? Poly(Rational(1)) : euler_poly(n - 1).shifted_down(1);
    rec.equal(tag("B alpha | e^x", n), numer(rec, tag("exp", n), b, a, F::ordinary, n),
              (at + (one_minus_x_pow(1) * at_prev).scaled(Rational(n))).scaled(1 / fact(n)));
    Series companion_a = Series::x(order).scaled(-1).exp();
    rec.equal(tag("(1+x, x e^-x) numerators", n),
              numer(rec, tag("exp companion", n), onepx_series(order), companion_a, F::ordinary, n),
              (euler_poly(n) - (one_minus_x_pow(1) * euler_poly(n - 1)).scaled(Rational(n))).scaled(sign(n) / fact(n)));
    Poly phi_t = numer(rec, tag("exp", n), b, a, F::exponential, n);
    rec.equal(tag("F (x+n+1)(x+1)^(n-1)", n),
              build({Family::F, n}).apply(linear(Rational(n + 1), 1) * one_plus_x_pow(static_cast<unsigned>(n - 1))), phi_t);
    rec.equal(tag("BF (x+n) x^(n-1)", n), build({Family::BF, n}).apply(linear(Rational(n), 1) * mono(n - 1)), phi_t);
  }
  for (const auto& entry : catalog(order)) {
    std::vector<Poly> u = sheffer_rows(Series::one(order), entry.series.log(), par.max_n);
    Series eb = derivative_of_xa(entry.series);
    Series ea = entry.series.truncated(order - 1);
    for (std::size_t n = 1; n <= par.max_n; ++n) {
      Poly ut = u[n].shifted_down(1);
      Poly phi_t = numer(rec, tag(entry.name, n), eb, ea, F::exponential, n);
      rec.equal(tag(entry.name + " F (x+n+1) u~(x+1)", n),
                build({Family::F, n}).apply(linear(Rational(n + 1), 1) * ut.shifted(Rational(1))), phi_t);
      rec.equal(tag(entry.name + " BF (x+n) u~", n), build({Family::BF, n}).apply(linear(Rational(n), 1) * ut), phi_t);
      rec.equal(tag(entry.name + " Ft u~", n), build({Family::Ft, n}).apply(ut), phi_t);
    }
  }
  for (std::size_t n = 1; n <= par.matrix_bound(); ++n) {
    FiniteOperator f = build({Family::F, n}), bf = build({Family::BF, n});
    FiniteOperator via_f = f * multiplication(linear(Rational(n + 1), 1), n + 1, n) * shift_power(Rational(1), n);
    FiniteOperator via_bf = bf * multiplication(linear(Rational(n), 1), n + 1, n);
    rec.equal(tag("F (x+n+1, x) E I", n), via_f.block(n, n), build({Family::Ft, n}));
    rec.equal(tag("BF (x+n, x) I", n), via_bf.block(n, n), build({Family::Ft, n}));
    for (std::size_t p = 0; p < n; ++p) {
      rec.equal(tag("[x^n] F x^p (x+n+1), p=" + std::to_string(p), n), via_f.at(n, p), Rational(0));
      rec.equal(tag("[x^n] BF x^p (x+n), p=" + std::to_string(p), n), via_bf.at(n, p), Rational(0));
    }
  }
}

Rational sumid(std::size_t n, std::size_t p, long offset) {
  Rational s = 0;
  long nn = static_cast<long>(n);
  for (long m = 0; m <= nn; ++m)
    s += sign(static_cast<std::size_t>(nn - m)) * binomial(2 * nn + 1, nn - m) * power(Rational(m + offset), p) *
         binomial(m + nn, nn);
  return s;
}

void sumid1(Recorder& rec) {
  for (std::size_t n = 0; n <= rec.params().matrix_bound(); ++n) {
    FiniteOperator f = build({Family::F, n});
    for (std::size_t p = 0; p <= n; ++p) {
      Rational s = sumid(n, p, 0);
      rec.equal(tag("p=" + std::to_string(p), n), s, sign(n + p) * power(Rational(n + 1), p));
      rec.equal(tag("[x^n] F x^p, p=" + std::to_string(p), n), s, f.at(n, p));
    }
  }
}

void sumid2(Recorder& rec) {
  for (std::size_t n = 0; n <= rec.params().matrix_bound(); ++n) {
    FiniteOperator bf = build({Family::BF, n});
    for (std::size_t p = 0; p <= n; ++p) {
      Rational s = sumid(n, p, 1);
      rec.equal(tag("p=" + std::to_string(p), n), s, sign(n + p) * power(Rational(n), p));
      rec.equal(tag("[x^n] BF x^p, p=" + std::to_string(p), n), s, bf.at(n, p));
    }
  }
}

/// Generalized binomial series _(beta)(1+x)^phi.
struct Binomials {
  std::size_t order;
  Series operator()(const Rational& beta, const Rational& phi) const { return generalized_binomial(beta, phi, order); }
};

void ex7(Recorder& rec) {
  const CheckParams& par = rec.params();
  Binomials gb{par.order};
  for (const Rational& b : par.beta_grid) {
    std::string where = "beta=" + to_string(b);
    rec.equal(where + " series identity", gb(b, 1) * one_plus_xlog(gb(b, b - 1)), one_plus_xlog(gb(b, b)));
  }
  Binomials pgb{pipeline_order(par, par.max_n)};
  for (std::size_t n = 1; n <= par.max_n; ++n)
    for (const Rational& b : par.beta_grid) {
      FiniteOperator g = build({Family::G, n, b});
      Series assoc = pgb(b, 1);
      rec.equal(tag("numerators", n, b), numer(rec, tag("G x^n", n, b), one_plus_xlog(pgb(b, b)), assoc, F::ordinary, n),
                g.column(n));
      rec.equal(tag("second form", n, b),
                numer(rec, tag("second form", n, b), assoc * one_plus_xlog(pgb(b, b - 1)), assoc, F::ordinary, n),
                g.column(n));
      rec.equal(tag("G x^0 = G^(beta+1) x^n", n, b), g.column(0), build({Family::G, n, b + 1}).column(n));
    }
}

void ex8(Recorder& rec) {
  const CheckParams& par = rec.params();
  Binomials gb{par.order};
  for (const Rational& b : par.beta_grid) {
    std::string where = "beta=" + to_string(b);
    rec.equal(where + " first coincidence prefactor", one_plus_xlog(gb(1 - b, -b)), reflect(one_plus_xlog(gb(b, b))));
    rec.equal(where + " first coincidence series", gb(1 - b, 1), reflect(gb(b, -1)));
    rec.equal(where + " second coincidence prefactor", gb(-b, 1) * one_plus_xlog(gb(-b, -b)),
              reflect(gb(b + 1, -1) * one_plus_xlog(gb(b + 1, b))));
    rec.equal(where + " second coincidence series", gb(-b, 1), reflect(gb(b + 1, -1)));
  }
  Binomials pgb{pipeline_order(par, par.max_n)};
  for (std::size_t n = 1; n <= par.max_n; ++n)
    for (const Rational& b : par.beta_grid) {
      FiniteOperator g = build({Family::G, n, b});
      rec.equal(tag("G x", n, b),
                numer(rec, tag("G x", n, b), one_plus_xlog(pgb(b + 1, b)), pgb(b + 1, 1), F::ordinary, n), g.column(1));
      Series assoc = pgb(b, 1);
      rec.equal(tag("G x^(n-1)", n, b),
                numer(rec, tag("G x^(n-1)", n, b), assoc * one_plus_xlog(pgb(b, b)), assoc, F::ordinary, n),
                g.column(n - 1));
      rec.equal(tag("G^-beta x = J G^beta x^(n-1)", n, b), build({Family::G, n, -b}).column(1),
                poly_reverse(g.column(n - 1), static_cast<unsigned>(n)));
    }
}

void ex9(Recorder& rec) {
  const CheckParams& par = rec.params();
  Binomials gb{par.order + 1};
  for (const Rational& b : par.beta_grid) {
    std::string where = "beta=" + to_string(b);
    Series c = gb(b - 1, -1);
    Series xc = c.times_x().truncated(par.order + 1);
    Series lhs = xc.derivative() * one_plus_xlog(gb(b, b)).compose(xc);
    rec.equal(where + " prefactor identity", lhs, (one_plus_xlog(gb(b - 1, b - 1)) * c).truncated(par.order));
    rec.equal(where + " inverse pair", inverse_companion(gb(b, 1)).truncated(par.order), c.truncated(par.order));
    rec.equal(where + " coincidence prefactor", one_plus_xlog(gb(2 - b, 2 - b)),
              reflect(one_plus_xlog(gb(b - 1, b - 1)) * c));
    rec.equal(where + " coincidence series", gb(2 - b, 1), reflect(c));
  }
  Binomials pgb{pipeline_order(par, par.max_n)};
  for (std::size_t n = 1; n <= par.max_n; ++n) {
    Rational scale = fact(2 * n) / fact(n);
    rec.equal(tag("h_n at beta=2", n), numer(rec, tag("beta=2", n), one_plus_xlog(pgb(2, 2)), pgb(2, 1), F::exponential, n),
              Poly(scale));
    for (const Rational& b : par.beta_grid) {
      FiniteOperator h = build({Family::H, n, b});
      rec.equal(tag("(2n)!/n! H x^n", n, b),
                numer(rec, tag("H x^n", n, b), one_plus_xlog(pgb(b, b)), pgb(b, 1), F::exponential, n),
                h.column(n).scaled(scale));
      rec.equal(tag("H x^0 = H^(beta+2) x^n", n, b), h.column(0), build({Family::H, n, b + 2}).column(n));
      rec.equal(tag("H^-beta x^0 = J H^beta x^n", n, b), build({Family::H, n, -b}).column(0),
                poly_reverse(h.column(n), static_cast<unsigned>(n)));
    }
  }
}

}  // namespace

void register_example_checks(Registry& r) {
  r["EX1"] = ex1;
  r["EX2"] = ex2;
  r["EX3"] = ex3;
  r["EX4"] = ex4;
  r["EX5"] = ex5;
  r["EX6"] = ex6;
  r["EX7"] = ex7;
  r["EX8"] = ex8;
  r["EX9"] = ex9;
  r["SUMID1"] = sumid1;
  r["SUMID2"] = sumid2;
}

}  // namespace eulnar::detail
