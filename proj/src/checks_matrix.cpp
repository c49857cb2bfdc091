#include "checks.hpp"
#include "eulnar/combinatorics.hpp"
#include "eulnar/transforms.hpp"

namespace eulnar::detail {

namespace {

FiniteOperator op(Family f, std::size_t n, const Rational& beta = 1) { return build({f, n, beta}); }

Rational sign(std::size_t k) { return k % 2 ? Rational(-1) : Rational(1); }

Poly mono(std::size_t p) { return Poly::monomial(p); }

Rational fact(std::size_t k) { return factorial(static_cast<unsigned>(k)); }

void inverse_pair(Recorder& rec, Family f, Family finv, std::size_t n, const Rational& beta = 1) {
  FiniteOperator m = op(f, n, beta);
  rec.equal(tag(std::string(family_token(f)) + " inverse", n, beta), m * op(finv, n, beta),
            FiniteOperator::identity(m.dim()));
}

void factored_equals_definition(Recorder& rec, Family f, std::size_t n, const Rational& beta) {
  rec.equal(tag(std::string(family_token(f)) + " factorization", n, beta), build_factored({f, n, beta}),
            op(f, n, beta));
}

void closed_columns(Recorder& rec, Family f, std::size_t n, const Rational& beta) {
  FiniteOperator m = op(f, n, beta);
  for (std::size_t p = 0; p < m.dim(); ++p)
    rec.equal(tag(std::string(family_token(f)) + " column " + std::to_string(p), n, beta),
              closed_form_column({f, n, beta}, p), m.column(p));
}

void reversal_conjugation(Recorder& rec, Family f, Family j, std::size_t n, const Rational& beta) {
  FiniteOperator r = op(j, n);
  rec.equal(tag(std::string(family_token(f)) + " reversal", n, beta), op(f, n, -beta), r * op(f, n, beta) * r);
}

void t1(Recorder& rec) {
  for (std::size_t n = 1; n <= rec.params().matrix_bound(); ++n) {
    inverse_pair(rec, Family::Ut, Family::Utinv, n);
    rec.equal(tag("Ut R Ut^-1", n), op(Family::Ut, n) * reflection(n) * op(Family::Utinv, n),
              op(Family::Jt, n).scaled(sign(n - 1)));
  }
}

void t3(Recorder& rec) {
  for (std::size_t n = 2; n <= rec.params().matrix_bound(); ++n) {
    FiniteOperator u = op(Family::Ut, n), ui = op(Family::Utinv, n);
    for (std::size_t m = 1; m < n; ++m) {
      FiniteOperator ur = op(Family::Ut, n - m), uri = op(Family::Utinv, n - m);
      Poly factor = one_minus_x_pow(static_cast<unsigned>(m));
      for (std::size_t p = 0; p + m < n; ++p) {
        std::string where = tag("m=" + std::to_string(m) + " p=" + std::to_string(p), n);
        rec.equal(where, u.apply(mono(p)), (factor * ur.apply(mono(p))).scaled(fact(n - m) / fact(n)));
        rec.equal(where + " inverse", ui.apply(factor * mono(p)), uri.apply(mono(p)).scaled(fact(n) / fact(n - m)));
      }
    }
  }
}

void t4(Recorder& rec) {
  for (std::size_t n = 1; n <= rec.params().matrix_bound(); ++n) {
    inverse_pair(rec, Family::Vt, Family::Vtinv, n);
    inverse_pair(rec, Family::Dt, Family::Dtinv, n);
    for (const Rational& b : rec.params().beta_grid) {
      factored_equals_definition(rec, Family::A, n, b);
      rec.equal(tag("A inverse", n, b), op(Family::A, n, b) * op(Family::A, n, -b), FiniteOperator::identity(n));
    }
  }
}

void t6(Recorder& rec) {
  for (std::size_t n = 1; n <= rec.params().matrix_bound(); ++n) {
    inverse_pair(rec, Family::Ft, Family::Ftinv, n);
    rec.equal(tag("Ft E^n R Ft^-1", n),
              op(Family::Ft, n) * shift_power(Rational(n), n) * reflection(n) * op(Family::Ftinv, n),
              op(Family::Jt, n).scaled(sign(n - 1)));
  }
}

void t7(Recorder& rec) {
  for (std::size_t n = 1; n <= rec.params().matrix_bound(); ++n) {
    inverse_pair(rec, Family::St, Family::Stinv, n);
    inverse_pair(rec, Family::Ct, Family::Ctinv, n);
    factored_equals_definition(rec, Family::St, n, 1);
  }
}

void t9(Recorder& rec) {
  for (std::size_t n = 0; n <= rec.params().matrix_bound(); ++n) {
    inverse_pair(rec, Family::U, Family::Uinv, n);
    rec.equal(tag("U E R U^-1", n),
              op(Family::U, n) * shift_power(Rational(1), n + 1) * reflection(n + 1) * op(Family::Uinv, n),
              op(Family::J, n).scaled(sign(n)));
  }
}

void t10(Recorder& rec) {
  for (std::size_t n = 1; n <= rec.params().matrix_bound(); ++n) {
    FiniteOperator u = op(Family::U, n), ui = op(Family::Uinv, n);
    for (std::size_t m = 1; m <= n; ++m) {
      FiniteOperator ur = op(Family::U, n - m), uri = op(Family::Uinv, n - m);
      Poly factor = one_minus_x_pow(static_cast<unsigned>(m));
      for (std::size_t p = 0; p + m <= n; ++p) {
        std::string where = tag("m=" + std::to_string(m) + " p=" + std::to_string(p), n);
        rec.equal(where, u.apply(mono(p)), (factor * ur.apply(mono(p))).scaled(fact(n - m) / fact(n)));
        rec.equal(where + " inverse", ui.apply(factor * mono(p)), uri.apply(mono(p)).scaled(fact(n) / fact(n - m)));
      }
    }
  }
}

void t11(Recorder& rec) {
  for (std::size_t n = 1; n <= rec.params().matrix_bound(); ++n) {
    inverse_pair(rec, Family::F, Family::Finv, n);
    inverse_pair(rec, Family::BF, Family::BFinv, n);
    rec.equal(tag("F E^(n+1) R F^-1", n),
              op(Family::F, n) * shift_power(Rational(n + 1), n + 1) * reflection(n + 1) * op(Family::Finv, n),
              op(Family::J, n).scaled(sign(n)));
    rec.equal(tag("BF E^(n-1) R BF^-1", n),
              op(Family::BF, n) * shift_power(Rational(n) - 1, n + 1) * reflection(n + 1) * op(Family::BFinv, n),
              op(Family::J, n).scaled(sign(n)));
    rec.equal(tag("BF = F E", n), op(Family::BF, n), op(Family::F, n) * shift_power(Rational(1), n + 1));
  }
}

void t12(Recorder& rec) {
  for (std::size_t n = 1; n <= rec.params().matrix_bound(); ++n) {
    inverse_pair(rec, Family::S, Family::Sinv, n);
    inverse_pair(rec, Family::C, Family::Cinv, n);
    inverse_pair(rec, Family::V, Family::Vinv, n);
    factored_equals_definition(rec, Family::S, n, 1);
  }
}

void t13(Recorder& rec) {
  for (std::size_t n = 1; n <= rec.params().matrix_bound(); ++n) closed_columns(rec, Family::S, n, 1);
}

void t14(Recorder& rec) {
  for (std::size_t n = 1; n <= rec.params().matrix_bound(); ++n) closed_columns(rec, Family::Sinv, n, 1);
}

void t15(Recorder& rec) {
  for (std::size_t n = 1; n <= rec.params().matrix_bound(); ++n)
    for (const Rational& b : rec.params().beta_grid) {
      reversal_conjugation(rec, Family::G, Family::J, n, b);
      rec.equal(tag("G inverse", n, b), op(Family::G, n, b) * op(Family::G, n, -b), FiniteOperator::identity(n + 1));
    }
}

void t16(Recorder& rec) {
  for (std::size_t n = 1; n <= rec.params().matrix_bound(); ++n)
    for (const Rational& b : rec.params().beta_grid) factored_equals_definition(rec, Family::G, n, b);
}

void t17(Recorder& rec) {
  for (std::size_t n = 1; n <= rec.params().matrix_bound(); ++n)
    for (const Rational& b : rec.params().beta_grid) closed_columns(rec, Family::G, n, b);
}

void t18(Recorder& rec) {
  for (std::size_t n = 1; n <= rec.params().matrix_bound(); ++n)
    for (const Rational& b : rec.params().beta_grid) {
      reversal_conjugation(rec, Family::H, Family::J, n, b);
      rec.equal(tag("H inverse", n, b), op(Family::H, n, b) * op(Family::H, n, -b), FiniteOperator::identity(n + 1));
    }
}

void t19(Recorder& rec) {
  for (std::size_t n = 1; n <= rec.params().matrix_bound(); ++n)
    for (const Rational& b : rec.params().beta_grid) {
      closed_columns(rec, Family::H, n, b);
      FiniteOperator h = op(Family::H, n, b);
      rec.equal(tag("H last column", n, b), corner_column({Family::H, n, b}, true), h.column(n));
      rec.equal(tag("H first column", n, b), corner_column({Family::H, n, b}, false), h.column(0));
      rec.equal(tag("H = S G S^-1", n, b), op(Family::S, n) * op(Family::G, n, b) * op(Family::Sinv, n), h);
      factored_equals_definition(rec, Family::H, n, b);
    }
}

void t20(Recorder& rec) {
  for (std::size_t n = 1; n <= rec.params().matrix_bound(); ++n)
    for (const Rational& b : rec.params().beta_grid) {
      reversal_conjugation(rec, Family::T, Family::Jt, n, b);
      reversal_conjugation(rec, Family::A, Family::Jt, n, b);
      rec.equal(tag("T inverse", n, b), op(Family::T, n, b) * op(Family::T, n, -b), FiniteOperator::identity(n));
    }
}

void t21(Recorder& rec) {
  for (std::size_t n = 1; n <= rec.params().matrix_bound(); ++n)
    for (const Rational& b : rec.params().beta_grid) {
      closed_columns(rec, Family::T, n, b);
      FiniteOperator t = op(Family::T, n, b);
      rec.equal(tag("T last column", n, b), corner_column({Family::T, n, b}, true), t.column(n - 1));
      rec.equal(tag("T first column", n, b), corner_column({Family::T, n, b}, false), t.column(0));
      rec.equal(tag("T = St A St^-1", n, b), op(Family::St, n) * op(Family::A, n, b) * op(Family::Stinv, n), t);
      factored_equals_definition(rec, Family::T, n, b);
    }
}

void r1(Recorder& rec) {
  for (std::size_t n = 2; n <= rec.params().matrix_bound(); ++n) {
    rec.expect(tag("shift relations", n), shift_relations_check(n));
    FiniteOperator include = FiniteOperator::identity(n + 1).block(n + 1, n);
    rec.equal(tag("Ut^-1 = down U^-1 up", n), lowering(n) * op(Family::Uinv, n) * raising(n), op(Family::Utinv, n));
    rec.equal(tag("Ut^-1 = down E^-1 U^-1 I", n),
              lowering(n) * shift_power(Rational(-1), n + 1) * op(Family::Uinv, n) * include, op(Family::Utinv, n));
  }
}

void stirling_check(Recorder& rec) {
  using K = StirlingKind;
  for (std::size_t n = 1; n <= rec.params().matrix_bound(); ++n) {
    FiniteOperator tilde_down = op(Family::Utinv, n) * op(Family::Vtinv, n);
    FiniteOperator tilde_up = op(Family::Vt, n) * op(Family::Ut, n);
    for (unsigned p = 0; p < n; ++p) {
      std::vector<Rational> first(p + 1), second(p + 1);
      for (unsigned m = 1; m <= p + 1; ++m) {
        first[m - 1] = stirling(K::first, p + 1, m) * fact(n) / fact(p + 1);
        second[m - 1] = stirling(K::second, p + 1, m) * fact(m) / fact(n);
      }
      rec.equal(tag("Ut^-1 Vt^-1 x^" + std::to_string(p), n), tilde_down.column(p), Poly(first));
      rec.equal(tag("Vt Ut x^" + std::to_string(p), n), tilde_up.column(p), Poly(second));
    }
    FiniteOperator down = op(Family::Uinv, n) * op(Family::Vinv, n);
    FiniteOperator up = op(Family::V, n) * op(Family::U, n);
    for (unsigned p = 0; p <= n; ++p) {
      std::vector<Rational> first(p + 1), second(p + 1);
      for (unsigned m = 0; m <= p; ++m) {
        first[m] = stirling(K::first, p, m) * fact(n) / fact(p);
        second[m] = stirling(K::second, p, m) * fact(m) / fact(n);
      }
      rec.equal(tag("U^-1 V^-1 x^" + std::to_string(p), n), down.column(p), Poly(first));
      rec.equal(tag("V U x^" + std::to_string(p), n), up.column(p), Poly(second));
    }
  }
}

void colsum_a(Recorder& rec) {
  for (std::size_t n = 1; n <= rec.params().matrix_bound(); ++n)
    for (const Rational& b : rec.params().beta_grid) {
      FiniteOperator a = op(Family::A, n, b);
      for (std::size_t p = 0; p < n; ++p)
        rec.equal(tag("column sum " + std::to_string(p), n, b), a.column(p).evaluate(Rational(1)), Rational(1));
    }
}

void grouplaw_g(Recorder& rec) {
  for (std::size_t n = 1; n <= rec.params().matrix_bound(); ++n) {
    FiniteOperator x = op(Family::X, n);
    std::vector<Poly> cols{(Poly(Rational(1)) - mono(1) - one_minus_x_pow(static_cast<unsigned>(n + 1))).shifted_down(1)};
    for (std::size_t p = 1; p <= n; ++p) cols.push_back(mono(p - 1) * one_minus_x_pow(1));
    rec.equal(tag("X columns", n), x, FiniteOperator::from_columns(cols, n + 1));
    FiniteOperator id = FiniteOperator::identity(n + 1);
    rec.equal(tag("I + X = G^(1/n)", n), id + x, op(Family::G, n, make_rational(1, static_cast<long>(n))));
    rec.equal(tag("I + X = U E U^-1", n), id + x,
              op(Family::U, n) * shift_power(Rational(1), n + 1) * op(Family::Uinv, n));
    rec.equal(tag("X nilpotent", n), x.power(static_cast<unsigned>(n + 1)), FiniteOperator(n + 1, n + 1));
    for (const Rational& b : rec.params().beta_grid) {
      FiniteOperator sum(n + 1, n + 1), power = id;
      Rational nb = Rational(n) * b;
      for (unsigned m = 0; m <= n; ++m) {
        sum = sum + power.scaled(rat_binomial(nb, m));
        power = power * x;
      }
      rec.equal(tag("G = (I + X)^(n beta)", n, b), sum, op(Family::G, n, b));
    }
  }
}

void reduce(Recorder& rec, Family f) {
  std::size_t first = f == Family::A ? 2 : 1;
  for (std::size_t n = first; n <= rec.params().matrix_bound(); ++n)
    for (std::size_t m = 1; m < n; ++m)
      for (const Rational& b : rec.params().beta_grid) {
        Rational scaled = Rational(n) * b / Rational(n - m);
        rec.equal(tag(std::string(family_token(f)) + " reduce m=" + std::to_string(m), n, b),
                  reduce_conjugation({f, n, b}, m), op(f, n - m, scaled));
      }
}

}  // namespace

void register_matrix_checks(Registry& r) {
  r["T1"] = t1;
  r["T3"] = t3;
  r["T4"] = t4;
  r["T6"] = t6;
  r["T7"] = t7;
  r["T9"] = t9;
  r["T10"] = t10;
  r["T11"] = t11;
  r["T12"] = t12;
  r["T13"] = t13;
  r["T14"] = t14;
  r["T15"] = t15;
  r["T16"] = t16;
  r["T17"] = t17;
  r["T18"] = t18;
  r["T19"] = t19;
  r["T20"] = t20;
  r["T21"] = t21;
  r["R1"] = r1;
  r["STIRLING"] = stirling_check;
  r["COLSUM_A"] = colsum_a;
  r["GROUPLAW_G"] = grouplaw_g;
  r["REDUCE_A"] = [](Recorder& rec) { reduce(rec, Family::A); };
  r["REDUCE_G"] = [](Recorder& rec) { reduce(rec, Family::G); };
}

}  // namespace eulnar::detail
