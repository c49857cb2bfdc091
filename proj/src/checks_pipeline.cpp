#include "checks.hpp"
#include "eulnar/catalog.hpp"
#include "eulnar/combinatorics.hpp"
#include "eulnar/gf_check.hpp"
#include "eulnar/lagrange.hpp"
#include "eulnar/transforms.hpp"

namespace eulnar::detail {

namespace {

using F = ArrayFlavor;

Rational fact(std::size_t k) { return factorial(static_cast<unsigned>(k)); }
Rational sign(std::size_t k) { return k % 2 ? Rational(-1) : Rational(1); }
Poly mono(std::size_t p, Rational c = 1) { return Poly::monomial(p, std::move(c)); }

std::size_t top_order(const CheckParams& p) { return pipeline_order(p, p.max_n); }

NumeratorResult numer(Recorder& rec, const std::string& where, const Series& b, const Series& a, F flavor,
                      std::size_t n) {
  NumeratorResult r = numerator(make_pair(b, a), flavor, n, rec.params().guard);
  rec.residual(where + " residual", r);
  return r;
}

Poly numer_poly(Recorder& rec, const std::string& where, const Series& a, F flavor, std::size_t n) {
  return numer(rec, where, Series::one(a.order()), a, flavor, n).numerator;
}

/// The catalog of series with a(0) = 1 used by the pipeline checks.
std::vector<CatalogEntry> pipeline_catalog(std::size_t order) { return catalog(order); }

/// x J_n p.
Poly x_reversed(const Poly& p, std::size_t n) { return poly_reverse(p, static_cast<unsigned>(n)).shifted_up(1); }

/// c with (1, x c) the compositional inverse of (1, x a).
Series inverse_companion(const Series& a) { return a.times_x().truncated(a.order()).reversion().divide_by_x(); }

void t2(Recorder& rec) {
  std::size_t order = top_order(rec.params());
  for (const auto& e : pipeline_catalog(order)) {
    Rational a1 = e.series.coeff(1);
    for (std::size_t n = 1; n <= rec.params().max_n; ++n) {
      std::string where = tag(e.name, n);
      Rational power = 1;
      for (std::size_t k = 0; k < n; ++k) power *= a1;
      rec.equal(where + " alpha_n(1)", numer_poly(rec, where, e.series, F::ordinary, n).evaluate(Rational(1)), power);
      rec.equal(where + " phi_n(1)", numer_poly(rec, where, e.series, F::exponential, n).evaluate(Rational(1)),
                power * fact(2 * n) / fact(n));
    }
  }
  for (std::size_t n = 1; n <= rec.params().matrix_bound(); ++n) {
    FiniteOperator u = build({Family::Ut, n});
    for (std::size_t p = 0; p < n; ++p)
      rec.equal(tag("Ut x^" + std::to_string(p) + " at 1", n), u.column(p).evaluate(Rational(1)),
                Rational(p + 1 == n ? 1 : 0));
  }
}

void t5(Recorder& rec) {
  const CheckParams& par = rec.params();
  std::size_t order = top_order(par);
  for (const Rational& b : par.beta_grid) {
    Series gb = generalized_binomial(b, 1, order);
    for (std::size_t n = 1; n <= par.max_n; ++n)
      rec.equal(tag("closed form vs numerator", n, b), gep_closed_form(b, n),
                numer_poly(rec, tag("genbinom", n, b), gb, F::ordinary, n));
  }
  for (std::size_t n = 1; n <= par.max_n; ++n) {
    rec.equal(tag("beta=1", n), gep_closed_form(1, n), mono(1));
    rec.equal(tag("beta=0", n), gep_closed_form(0, n), mono(n));
    Poly catalan_gep = numer_poly(rec, tag("catalan", n), catalan_series(order), F::ordinary, n);
    rec.equal(tag("x (2n)!/n! St^-1 x^0", n),
              build({Family::Stinv, n}).column(0).shifted_up(1).scaled(fact(2 * n) / fact(n)), catalan_gep);
    rec.equal(tag("catalan closed form", n), catalan_gep, gep_closed_form(2, n));
  }
  rec.equal("beta=1/2 n=2", gep_closed_form(make_rational(1, 2), 2), (mono(1) + mono(2)).scaled(make_rational(1, 2)));
  for (std::size_t n = 1; n <= par.max_n; ++n)
    for (const Rational& b : par.beta_grid) {
      FiniteOperator a = build({Family::A, n, b});
      for (const auto& e : pipeline_catalog(order)) {
        std::string where = tag("A pipeline " + e.name, n, b);
        Series assoc = lagrange_associate(e.series, b);
        Poly lhs = a.apply(numer_poly(rec, where, e.series, F::ordinary, n).shifted_down(1));
        rec.equal(where, lhs, numer_poly(rec, where, assoc, F::ordinary, n).shifted_down(1));
      }
    }
}

void t8(Recorder& rec) {
  const CheckParams& par = rec.params();
  std::size_t order = top_order(par);
  for (const Rational& b : par.beta_grid) {
    Series gb = generalized_binomial(b, 1, order);
    for (std::size_t n = 1; n <= par.max_n; ++n)
      rec.equal(tag("closed form vs numerator", n, b), gnp_closed_form(b, n),
                numer_poly(rec, tag("genbinom", n, b), gb, F::exponential, n));
  }
  for (std::size_t n = 1; n <= par.max_n; ++n) {
    rec.equal(tag("beta=1", n), gnp_closed_form(1, n), narayana_poly(n).scaled(fact(n + 1)));
    rec.equal(tag("beta=2", n), gnp_closed_form(2, n), mono(1, fact(2 * n) / fact(n)));
    rec.equal(tag("beta=0", n), gnp_closed_form(0, n), mono(n, fact(2 * n) / fact(n)));
    rec.equal(tag("x St x^0", n), build({Family::St, n}).column(0).shifted_up(1),
              numer_poly(rec, tag("geom", n), geom_series(order), F::exponential, n));
  }
  for (std::size_t n = 1; n <= par.max_n; ++n)
    for (const Rational& b : par.beta_grid) {
      FiniteOperator t = build({Family::T, n, b});
      for (const auto& e : pipeline_catalog(order)) {
        std::string where = tag("T pipeline " + e.name, n, b);
        Series assoc = lagrange_associate(e.series, b);
        Poly lhs = t.apply(numer_poly(rec, where, e.series, F::exponential, n).shifted_down(1));
        rec.equal(where, lhs, numer_poly(rec, where, assoc, F::exponential, n).shifted_down(1));
      }
    }
}

void r2(Recorder& rec) {
  std::size_t order = rec.params().order;
  std::size_t wide = order + rec.params().max_n + 1;
  for (const auto& e : pipeline_catalog(wide)) {
    Series c = inverse_companion(e.series.truncated(order + 1));
    rec.equal(e.name + " lagrange(a, -1, -1)", lagrange_associate(e.series.truncated(order), -1, -1), c);
    Series h = c.times_x().truncated(order);
    Series correction = Series::one(order) + x_log_derivative(c);
    for (const Series& b : {Series::one(wide), exp_series(wide), geom_series(wide)}) {
      Series prefactor = b.compose(h) * correction;
      for (std::size_t n = 0; n <= rec.params().max_n; ++n) {
        std::vector<Rational> diag(order + 1);
        for (std::size_t m = 0; m <= order; ++m) {
          Series col = b * e.series.inverse().pow(static_cast<unsigned>(m + n));
          diag[m] = col.coeff(m);
        }
        Series rhs = prefactor * c.pow(static_cast<unsigned>(n));
        rec.equal(tag(e.name + " diagonal of (b, 1/a)^T", n), Series(diag, order), rhs);
      }
      std::vector<Poly> rows = sheffer_rows(b, e.series.log(), rec.params().max_n);
      for (std::size_t j = 0; j <= rec.params().max_n; ++j)
        for (long i = 0; i <= static_cast<long>(rec.params().max_n); ++i)
          rec.equal(tag(e.name + " s_j(-" + std::to_string(i) + ")", j),
                    rows[j].evaluate(Rational(-i)) / fact(j),
                    (b * e.series.inverse().pow(static_cast<unsigned>(i))).coeff(j));
    }
  }
}

void gfnarayana(Recorder& rec) {
  std::size_t n_max = rec.params().max_n;
  std::size_t order = top_order(rec.params());
  for (const auto& [name, a] : {std::pair{"geom", geom_series(order)}, std::pair{"exp", exp_series(order)},
                                std::pair{"onepx", onepx_series(order)}}) {
    std::string why;
    rec.expect(std::string(name) + " generating function through x^" + std::to_string(n_max),
               gnp_generating_check(a, n_max, &why), why);
  }
  PolySeries closed = narayana_closed_form_gf(n_max);
  for (std::size_t n = 0; n <= n_max; ++n) {
    rec.equal(tag("closed form coefficient", n), closed.coeff(n), narayana_poly(n));
    if (n > 0)
      rec.equal(tag("phi_n/(n+1)! for 1/(1-x)", n),
                numer_poly(rec, tag("geom", n), geom_series(order), F::exponential, n).scaled(1 / fact(n + 1)),
                narayana_poly(n));
  }
}

void dualbasis(Recorder& rec) {
  std::size_t order = rec.params().order;
  for (const auto& e : pipeline_catalog(order))
    for (const Rational& b : rec.params().beta_grid)
      for (const Rational& phi : {Rational(1), make_rational(-3, 2), Rational(2)})
        rec.equal(e.name + " beta=" + to_string(b) + " phi=" + to_string(phi),
                  dual_basis_residual(e.series, b, phi, order), Series::zero(order));
}

void reversal_gep(Recorder& rec) {
  const CheckParams& par = rec.params();
  for (std::size_t n = 1; n <= par.max_n; ++n)
    for (const Rational& b : par.beta_grid)
      rec.equal(tag("closed form", n, b), gep_closed_form(1 - b, n), x_reversed(gep_closed_form(b, n), n));
  std::size_t order = top_order(par);
  for (const auto& e : pipeline_catalog(order)) {
    Series inv = e.series.inverse();
    for (std::size_t n = 1; n <= par.max_n; ++n) {
      std::string where = tag(e.name, n);
      Poly alpha = numer_poly(rec, where, e.series, F::ordinary, n);
      rec.equal(where, numer_poly(rec, where + " inverse", inv, F::ordinary, n),
                x_reversed(alpha, n).scaled(sign(n)));
    }
  }
}

void reversal_gnp(Recorder& rec) {
  const CheckParams& par = rec.params();
  for (std::size_t n = 1; n <= par.max_n; ++n)
    for (const Rational& b : par.beta_grid)
      rec.equal(tag("closed form", n, b), gnp_closed_form(2 - b, n), x_reversed(gnp_closed_form(b, n), n));
  std::size_t order = top_order(par);
  for (const auto& e : pipeline_catalog(order + 1)) {
    Series c = inverse_companion(e.series).truncated(order);
    Series a = e.series.truncated(order);
    for (std::size_t n = 1; n <= par.max_n; ++n) {
      std::string where = tag(e.name, n);
      Poly phi = numer_poly(rec, where, a, F::exponential, n);
      rec.equal(where, numer_poly(rec, where + " inverse", c, F::exponential, n), x_reversed(phi, n).scaled(sign(n)));
    }
  }
}

void pseudoinv(Recorder& rec) {
  std::size_t order = top_order(rec.params());
  std::vector<std::pair<std::string, Series>> family;
  for (const Rational& k : {Rational(1), Rational(2), Rational(-1), make_rational(1, 2)})
    family.emplace_back("1/(1-" + to_string(k) + "x)",
                        Series::from_polynomial(Poly(std::vector<Rational>{1, -k}), order + 1).inverse());
  Series theta = Series::x(order + 2) * exp_series(order + 2);
  Series theta_bar = Series::x(order + 2) * exp_series(order + 2).compose(-Series::x(order + 2));
  family.emplace_back("reversion(x e^x) of x e^-x", theta.reversion().compose(theta_bar).divide_by_x());
  for (const auto& [name, a] : family) {
    Series minus = a.compose(-Series::x(order)).truncated(order);
    rec.equal(name + " pseudo-involution", inverse_companion(a).truncated(order), minus);
    for (std::size_t n = 1; n <= rec.params().max_n; ++n) {
      Poly phi = numer_poly(rec, tag(name, n), a.truncated(order), F::exponential, n);
      rec.equal(tag(name + " phi_n = x J phi_n", n), phi, x_reversed(phi, n));
    }
  }
}

void catalog_consistency(Recorder& rec) {
  std::size_t order = rec.params().order;
  Series x = Series::x(order + 1);
  Series one = Series::one(order + 1);
  rec.equal("exp", exp_series(order), x.exp().truncated(order));
  rec.equal("geom", geom_series(order), (one - x).inverse().truncated(order));
  rec.equal("onepx", onepx_series(order), (one + x).truncated(order));
  Series catalan = (x - x * x).reversion().divide_by_x();
  rec.equal("catalan reversion", catalan_series(order), catalan);
  Series c = catalan_series(order);
  rec.equal("catalan quadratic", c, Series::one(order) + (Series::x(order) * c * c));
  rec.equal("genbinom(2)", genbinom_series(2, order), c);
  rec.equal("genbinom(1)", genbinom_series(1, order), geom_series(order));
  rec.equal("genbinom(0)", genbinom_series(0, order), onepx_series(order));
  Series half_closed = (x.scaled(make_rational(1, 2)) + (one + (x * x).scaled(make_rational(1, 4))).pow(make_rational(1, 2)));
  rec.equal("genbinom(1/2)", genbinom_series(make_rational(1, 2), order + 1), half_closed * half_closed);
  Series minus_one_closed = (one + (one + x.scaled(4)).pow(make_rational(1, 2))).scaled(make_rational(1, 2));
  rec.equal("genbinom(-1)", genbinom_series(-1, order + 1), minus_one_closed);
  for (const Rational& b : rec.params().beta_grid)
    for (const Rational& phi : {Rational(1), make_rational(-3, 2), Rational(2)}) {
      std::string where = "beta=" + to_string(b) + " phi=" + to_string(phi);
      Series direct = generalized_binomial(b, phi, order);
      rec.equal(where + " lagrange(1+x)", lagrange_associate(onepx_series(order), b, phi), direct);
      rec.equal(where + " genbinom", genbinom_series(b, order, phi), direct);
    }
  for (const auto& e : catalog(order)) {
    rec.equal(e.name + " a(0)", e.series.coeff(0), Rational(1));
    rec.equal(e.name + " beta=0", lagrange_associate(e.series, 0), e.series);
  }
}

void oracle_array(Recorder& rec) {
  const CheckParams& par = rec.params();
  std::size_t n_max = std::min<std::size_t>(par.max_n, 5);
  std::size_t order = 3 * n_max + par.guard;
  std::vector<std::pair<std::string, Series>> bs{
      {"1", Series::one(order)}, {"exp", exp_series(order)}, {"geom", geom_series(order)}};
  for (const auto& e : pipeline_catalog(order))
    for (const auto& [bname, b] : bs)
      for (F flavor : {F::ordinary, F::exponential}) {
        SeriesPair pair = make_pair(b, e.series);
        std::string label = e.name + " b=" + bname + (flavor == F::ordinary ? " ordinary" : " exponential");
        // Entries of (b, x a) materialized as explicit coefficient grids.
        std::vector<std::vector<Rational>> grid(order + 1, std::vector<Rational>(order + 1));
        Series col = b;
        for (std::size_t m = 0; m <= order; ++m) {
          for (std::size_t k = m; k <= order; ++k) {
            Rational v = col.coeff(k - m);
            if (flavor == F::exponential) v *= fact(k) / fact(m);
            grid[k][m] = v;
          }
          col = col * e.series;
        }
        for (std::size_t m = 0; m <= n_max; ++m) {
          std::vector<Rational> expect(order + 1);
          for (std::size_t k = 0; k <= order; ++k) expect[k] = grid[k][m];
          rec.equal(label + " column " + std::to_string(m), riordan_column(pair, flavor, m), Series(expect, order));
        }
        for (std::size_t n = 0; n <= n_max; ++n) {
          std::vector<Rational> row(n + 1);
          for (std::size_t m = 0; m <= n; ++m) row[m] = grid[n][m];
          std::vector<Rational> from_columns(n + 1);
          for (std::size_t m = 0; m <= n; ++m) from_columns[m] = riordan_column(pair, flavor, m).coeff(n);
          rec.equal(tag(label + " row", n), Poly(from_columns), Poly(row));
          std::size_t span = order - n;
          std::vector<Rational> diag(span + 1);
          for (std::size_t m = 0; m <= span; ++m) diag[m] = grid[m + n][m];
          rec.equal(tag(label + " diagonal", n), diagonal_series(pair, flavor, n, span), Series(diag, span));
          NumeratorResult fast = numerator(pair, flavor, n, par.guard);
          NumeratorResult slow = materialized_numerator(b, e.series.times_x().truncated(order), flavor, n, par.guard);
          rec.residual(tag(label + " numerator", n), fast);
          rec.residual(tag(label + " materialized numerator", n), slow);
          rec.equal(tag(label + " numerator", n), fast.numerator, slow.numerator);
          std::size_t e_exp = flavor == F::ordinary ? n + 1 : 2 * n + 1;
          std::size_t bound = flavor == F::ordinary ? n : 2 * n;
          Poly diag_poly = Series(diag, span).to_polynomial();
          Poly cleared = diag_poly * one_minus_x_pow(static_cast<unsigned>(e_exp));
          std::vector<Rational> low(bound + 1);
          for (std::size_t k = 0; k <= bound; ++k) low[k] = cleared.coeff(k);
          rec.equal(tag(label + " numerator from grid", n), fast.numerator, Poly(low));
        }
        if (flavor == F::exponential) continue;
        Series am1 = e.series - Series::one(order);
        for (std::size_t n = 0; n <= n_max; ++n) {
          std::vector<Rational> srow(n + 1);
          Series power = b;
          for (std::size_t m = 0; m <= n; ++m) {
            srow[m] = power.coeff(n);
            power = power * am1;
          }
          rec.equal(tag(label + " square row", n), square_row(pair, n), Poly(srow));
        }
      }
}

void lagrange_check(Recorder& rec) {
  const CheckParams& par = rec.params();
  std::size_t order = par.order;
  for (const auto& e : catalog(order)) {
    const Series& a = e.series;
    Series x = Series::x(order);
    for (const Rational& b : par.beta_grid) {
      std::string where = e.name + " beta=" + to_string(b);
      Series assoc = lagrange_associate(a, b);
      rec.equal(where + " L(x a^-beta) = a", assoc.compose(x * a.pow(-b)), a);
      rec.equal(where + " a(x L^beta) = L", a.compose(x * assoc.pow(b)), assoc);
      rec.equal(where + " [x]L", assoc.coeff(1), a.coeff(1));
      for (const Rational& phi : {Rational(1), make_rational(-3, 2), Rational(2)}) {
        std::string wphi = where + " phi=" + to_string(phi);
        Series power = lagrange_associate(a, b, phi);
        for (std::size_t n = 0; n <= order; ++n) {
          Rational denom = phi + b * Rational(n);
          if (sgn(denom) == 0) continue;
          rec.equal(wphi + " coefficient " + std::to_string(n), power.coeff(n),
                    phi / denom * a.pow(denom).coeff(n));
        }
        rec.expect(wphi + " inverse pairs", inverse_pair_check(a, phi, b, order));
      }
      std::vector<Poly> u = sheffer_rows(Series::one(order), a.log(), par.max_n);
      std::vector<Poly> bu = sheffer_rows(Series::one(order), assoc.log(), par.max_n);
      for (std::size_t n = 1; n <= par.max_n; ++n) {
        Rational shift = Rational(n) * b;
        rec.equal(tag(e.name + " shift law", n, b), (mono(0, shift) + mono(1)) * bu[n], mono(1) * u[n].shifted(shift));
        rec.equal(tag(e.name + " E^(n beta) u~_n", n, b), shift_power(shift, n).apply(u[n].shifted_down(1)),
                  bu[n].shifted_down(1));
      }
    }
  }
  rec.equal("catalan from 1+x", lagrange_associate(onepx_series(order), 2), catalan_series(order));
  rec.equal("1+x beta=1/2", lagrange_associate(onepx_series(3), make_rational(1, 2)),
            Series({1, 1, make_rational(1, 2), make_rational(1, 8)}, 3));
  std::size_t porder = top_order(par);
  for (const Rational& b : par.beta_grid) {
    std::vector<FiniteOperator> g, h;
    for (std::size_t n = 1; n <= par.max_n; ++n) {
      g.push_back(build({Family::G, n, b}));
      h.push_back(build({Family::H, n, b}));
    }
    for (const auto& e : catalog(porder)) {
      Series assoc = lagrange_associate(e.series, b);
      for (const auto& [bname, bs] : {std::pair{"exp", exp_series(porder)}, std::pair{"geom", geom_series(porder)}}) {
        Series pre = beta_prefactor(e.series, bs, b);
        if (sgn(b) == 0) rec.equal(e.name + " b=" + bname + " beta=0 prefactor", pre, bs);
        for (std::size_t n = 1; n <= par.max_n; ++n) {
          std::string where = tag(e.name + " b=" + bname, n, b);
          Poly gn = numer(rec, where, bs, e.series, F::ordinary, n).numerator;
          Poly bgn = numer(rec, where + " shifted", pre, assoc, F::ordinary, n).numerator;
          rec.equal(where + " G pipeline", g[n - 1].apply(gn), bgn);
          Poly hn = numer(rec, where, bs, e.series, F::exponential, n).numerator;
          Poly bhn = numer(rec, where + " shifted", pre, assoc, F::exponential, n).numerator;
          rec.equal(where + " H pipeline", h[n - 1].apply(hn), bhn);
        }
      }
    }
  }
}

}  // namespace

void register_pipeline_checks(Registry& r) {
  r["T2"] = t2;
  r["T5"] = t5;
  r["T8"] = t8;
  r["R2"] = r2;
  r["GFNARAYANA"] = gfnarayana;
  r["DUALBASIS"] = dualbasis;
  r["REVERSAL_GEP"] = reversal_gep;
  r["REVERSAL_GNP"] = reversal_gnp;
  r["PSEUDOINV"] = pseudoinv;
  r["CATALOG_CONSISTENCY"] = catalog_consistency;
  r["ORACLE_ARRAY"] = oracle_array;
  r["LAGRANGE"] = lagrange_check;
}

}  // namespace eulnar::detail
