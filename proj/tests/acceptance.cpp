// Acceptance gate: one PASS/FAIL line per criterion, exit status 0 only when all pass.
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli_runner.hpp"
#include "eulnar/catalog.hpp"
#include "eulnar/combinatorics.hpp"
#include "eulnar/gf_check.hpp"
#include "eulnar/lagrange.hpp"
#include "eulnar/output.hpp"
#include "eulnar/riordan.hpp"
#include "eulnar/transforms.hpp"
#include "eulnar/verify.hpp"

using namespace eulnar;
using Json = nlohmann::json;
using testing::Run;
using testing::run_cli;

namespace {

/// Collects the first few mismatches of one criterion.
struct Tally {
  std::size_t cases = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok && failures.size() < 5) failures.push_back(what);
    if (!ok && failures.size() == 5) failures.push_back("...");
  }
  bool ok() const { return failures.empty(); }
};

Rational rat(const Json& j) {
  auto q = parse_rational(j.get<std::string>());
  if (!q) throw std::runtime_error("bad rational in fixture: " + j.dump());
  return *q;
}

FiniteOperator scaled_rows(const Json& rows, const Rational& scale) {
  std::vector<std::vector<Rational>> r;
  for (const auto& row : rows) {
    r.emplace_back();
    for (const auto& v : row) r.back().push_back(scale * rat(v));
  }
  return FiniteOperator::from_rows(r);
}

/// Evaluates expr at (n, beta); a lone size-adaptive token takes the given size.
FiniteOperator evaluate(const std::string& expr, std::size_t n, const Rational& beta, std::size_t size) {
  auto fam = parse_family(expr);
  if (fam && (*fam == Family::E || *fam == Family::R || *fam == Family::Pt)) return build({*fam, n, beta}, size);
  return evaluate_matrix_expression(expr, n, beta);
}

Json load_fixture() {
  std::ifstream in(EULNAR_FIXTURE);
  if (!in) throw std::runtime_error("cannot open " + std::string(EULNAR_FIXTURE));
  return Json::parse(in);
}

std::vector<CheckReport> suite(Tally& t, const std::vector<std::string>& ids, const CheckParams& p) {
  auto reports = run_suite(ids, p);
  for (const auto& r : reports) {
    std::string what = r.id + " " + std::string(verdict_name(r.verdict));
    if (r.counterexample) what += " at " + r.counterexample->where;
    if (!r.note.empty() && r.verdict != Verdict::pass) what += " (" + r.note + ")";
    t.expect(r.verdict == Verdict::pass, what);
  }
  return reports;
}

Tally displayed_matrices() {
  Tally t;
  for (const auto& e : load_fixture()) {
    std::string name = e["name"], expr = e["expr"];
    std::size_t n = e["n"];
    Rational beta = rat(e["beta"]);
    FiniteOperator actual = evaluate_matrix_expression(expr, n, beta);
    if (e.contains("rows")) {
      t.expect(actual == scaled_rows(e["rows"], rat(e["scale"])), name);
    } else if (e.contains("factors")) {
      FiniteOperator product = FiniteOperator::identity(actual.rows());
      for (const auto& f : e["factors"]) {
        Rational s = rat(f["scale"]) * (f.contains("factor") ? rat(f["factor"]) : Rational(1));
        FiniteOperator m = scaled_rows(f["rows"], s);
        if (f.contains("expr")) {
          std::string fe = f["expr"];
          t.expect(evaluate(fe, n, beta, m.rows()) == m, name + " factor " + fe);
        }
        product = product * m;
      }
      t.expect(product == actual, name + " product");
    } else {
      FiniteOperator sum = FiniteOperator::identity(actual.rows()).scaled(rat(e["identity_coef"]));
      for (const auto& term : e["terms"]) sum = sum + scaled_rows(term["rows"], rat(term["coef"]));
      t.expect(sum == actual, name);
    }
  }
  return t;
}

Tally euler_polynomials() {
  Tally t;
  const std::vector<std::vector<long>> listed = {{0, 1}, {0, 1, 1}, {0, 1, 4, 1}, {0, 1, 11, 11, 1}};
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<Rational> c(listed[n - 1].begin(), listed[n - 1].end());
    t.expect(euler_poly(n) == Poly(c), "A_" + std::to_string(n) + " = " + euler_poly(n).to_string());
  }
  for (std::size_t n = 1; n <= 8; ++n) {
    Poly a = euler_poly(n);
    t.expect(a.evaluate(Rational(1)) == factorial(static_cast<unsigned>(n)), "A_" + std::to_string(n) + "(1)");
    std::vector<Rational> powers(3 * n + 2);
    for (std::size_t m = 0; m < powers.size(); ++m) powers[m] = power(Rational(m), static_cast<unsigned>(n));
    Poly prod = Poly(powers) * one_minus_x_pow(static_cast<unsigned>(n + 1));
    for (std::size_t k = 0; k < powers.size(); ++k)
      t.expect(prod.coeff(k) == a.coeff(k), "A_" + std::to_string(n) + " vs sum m^n x^m at x^" + std::to_string(k));
  }
  return t;
}

Tally identity_battery() {
  Tally t;
  CheckParams p;
  p.max_n = 6;
  p.matrix_max_n = 8;
  std::vector<std::string> ids;
  for (int k = 1; k <= 21; ++k) ids.push_back("T" + std::to_string(k));
  suite(t, ids, p);
  return t;
}

Tally closed_forms() {
  Tally t;
  for (std::size_t n = 0; n <= 8; ++n) {
    std::size_t ord = required_order(n);
    for (const auto& beta : CheckParams::default_beta_grid()) {
      SeriesPair pair = make_pair(Series::one(ord), generalized_binomial(beta, Rational(1), ord));
      std::string at = "beta=" + to_string(beta) + " n=" + std::to_string(n);
      NumeratorResult o = numerator(pair, ArrayFlavor::ordinary, n);
      NumeratorResult e = numerator(pair, ArrayFlavor::exponential, n);
      t.expect(o.residual_ok && o.numerator == gep_closed_form(beta, n), "GEP " + at);
      t.expect(e.residual_ok && e.numerator == gnp_closed_form(beta, n), "GNP " + at);
    }
    if (n == 0) continue;
    auto gnp = [&](long beta) {
      return numerator(make_pair(Series::one(ord), generalized_binomial(Rational(beta), Rational(1), ord)),
                       ArrayFlavor::exponential, n)
          .numerator;
    };
    Rational twon = factorial(static_cast<unsigned>(2 * n)) / factorial(static_cast<unsigned>(n));
    t.expect(gnp(1) == narayana_poly(n).scaled(factorial(static_cast<unsigned>(n + 1))), "beta=1 Narayana");
    t.expect(gnp(2) == Poly::monomial(1, twon), "beta=2 monomial x");
    t.expect(gnp(0) == Poly::monomial(n, twon), "beta=0 monomial x^n");
  }
  return t;
}

Tally generating_function() {
  Tally t;
  for (const auto& [name, a] : std::vector<std::pair<std::string, Series>>{
           {"geom", geom_series(24)}, {"exp", exp_series(24)}, {"onepx", onepx_series(24)}}) {
    std::string why;
    bool ok = gnp_generating_check(a, 6, &why);
    t.expect(ok, name + ": " + why);
  }
  CheckParams p;
  suite(t, {"GFNARAYANA"}, p);
  return t;
}

Tally lagrange_layer() {
  Tally t;
  CheckParams p;
  p.order = 12;
  suite(t, {"LAGRANGE", "DUALBASIS"}, p);
  return t;
}

Tally worked_examples() {
  Tally t;
  CheckParams p;
  p.max_n = 8;
  p.order = 12;
  std::vector<std::string> ids;
  for (int k = 1; k <= 9; ++k) ids.push_back("EX" + std::to_string(k));
  ids.insert(ids.end(), {"SUMID1", "SUMID2"});
  suite(t, ids, p);
  return t;
}

Tally oracle_equivalence() {
  Tally t;
  CheckParams p;
  p.max_n = 5;
  suite(t, {"ORACLE_ARRAY"}, p);
  return t;
}

Tally cli() {
  Tally t;
  Run e = run_cli("euler 4 --json");
  t.expect(e.code == 0 && poly_from_doc(parse_doc(e.out)) == euler_poly(4), "euler 4");
  t.expect(render(parse_doc(e.out)) + "\n" == e.out, "canonical re-render");
  for (std::size_t n = 1; n <= 4; ++n) {
    Run r = run_cli("euler " + std::to_string(n) + " --json");
    t.expect(r.code == 0 && poly_from_doc(parse_doc(r.out)) == euler_poly(n), "euler " + std::to_string(n));
  }
  for (const auto& e : load_fixture()) {
    if (!e.contains("rows")) continue;
    std::string args = "matrix '" + e["expr"].get<std::string>() + "' --n " + std::to_string(e["n"].get<std::size_t>()) +
                       " --beta " + e["beta"].get<std::string>() + " --json";
    Run r = run_cli(args);
    bool ok = r.code == 0 && matrix_from_doc(parse_doc(r.out)) == scaled_rows(e["rows"], rat(e["scale"]));
    t.expect(ok, args);
  }
  Run st = run_cli("matrix Stilde 2");
  t.expect(st.code == 0 && st.out == "6 *\n1 0\n1 2\n", "matrix Stilde 2");
  Run g0 = run_cli("gep --series exp --n 0 --json");
  t.expect(g0.code == 0 && poly_from_doc(parse_doc(g0.out)) == Poly(Rational(1)), "gep n=0");
  for (std::size_t n = 1; n <= 8; ++n) {
    std::string sn = std::to_string(n);
    Run g = run_cli("gnp --series 'genbinom(1)' --n " + sn + " --json");
    t.expect(g.code == 0 && poly_from_doc(parse_doc(g.out)) == gnp_closed_form(Rational(1), n), "gnp genbinom(1) " + sn);
    Run a = run_cli("gep --series 'genbinom(-1/2)' --n " + sn + " --json");
    t.expect(a.code == 0 && poly_from_doc(parse_doc(a.out)) == gep_closed_form(make_rational(-1, 2), n),
             "gep genbinom(-1/2) " + sn);
  }
  Run s = run_cli("series '(1+x)/(1-x)^2' --order 6 --json");
  bool series_ok = s.code == 0;
  if (series_ok) {
    Series got = series_from_doc(parse_doc(s.out));
    for (std::size_t k = 0; k <= 6; ++k) series_ok = series_ok && got.coeff(k) == Rational(2 * k + 1);
  }
  t.expect(series_ok, "series (1+x)/(1-x)^2");
  Run l = run_cli("lagrange --series onepx --beta 2 --phi 1 --order 8 --json");
  t.expect(l.code == 0 && series_from_doc(parse_doc(l.out)) == catalan_series(8), "lagrange onepx 2");
  for (const auto& [args, pos] : std::vector<std::pair<std::string, std::string>>{
           {"series exq", "position 0"}, {"series '1+2y'", "position 3"}, {"gep --series 'genbinom(1/0)' --n 2", "position 11"}}) {
    Run r = run_cli(args, true);
    t.expect(r.code == 2 && r.out.find(pos) != std::string::npos, args + " exit " + std::to_string(r.code));
  }
  Run full = run_cli("check --json");
  bool full_ok = full.code == 0;
  if (full_ok) {
    OutputDoc d = parse_doc(full.out);
    full_ok = d.body["passed"] == true && d.body["checks"].size() == check_ids().size();
  }
  t.expect(full_ok, "full check run exit " + std::to_string(full.code));
  return t;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Tally()>>> criteria = {
      {"displayed matrices reproduced exactly", displayed_matrices},
      {"Euler polynomials and A_n(1) = n!", euler_polynomials},
      {"identity battery T1-T21", identity_battery},
      {"GEP/GNP closed forms against the pipeline", closed_forms},
      {"Narayana generating-function identity", generating_function},
      {"Lagrange layer identities", lagrange_layer},
      {"worked examples and summation identities", worked_examples},
      {"brute-force array oracle", oracle_equivalence},
      {"command line", cli},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Tally t;
    try {
      t = criteria[i].second();
    } catch (const std::exception& e) {
      t.failures.push_back(std::string("exception: ") + e.what());
    }
    all = all && t.ok();
    std::cout << "criterion " << i + 1 << ": " << (t.ok() ? "PASS" : "FAIL") << "  " << criteria[i].first << " ("
              << t.cases << " cases)\n";
    for (const auto& f : t.failures) std::cout << "    " << f << "\n";
  }
  return all ? 0 : 1;
}
