#include <CLI11.hpp>

#include <cctype>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "eulnar/lagrange.hpp"
#include "eulnar/output.hpp"
#include "eulnar/riordan.hpp"
#include "eulnar/series_spec.hpp"
#include "eulnar/transforms.hpp"
#include "eulnar/verify.hpp"

using namespace eulnar;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

/// An input error tied to one argument, reported with exit code 2.
struct InputError {
  std::string message;
};

struct Emit {
  bool json = false;

  void doc(const OutputDoc& d, const std::string& human) const {
    if (json) std::cout << render(d) << "\n";
    else std::cout << human;
  }
};

Series series_arg(const std::string& flag, const std::string& text, std::size_t order) {
  SeriesSpec spec;
  try {
    spec = parse_series_spec(text);
  } catch (const SpecError& e) {
    std::string caret = "  " + text + "\n  " + std::string(e.position(), ' ') + "^";
    throw InputError{"in " + flag + " '" + text + "': " + e.what() + "\n" + caret};
  }
  try {
    return resolve(spec, order);
  } catch (const std::exception& e) {
    throw InputError{"in " + flag + " '" + text + "': " + e.what()};
  }
}

Rational rational_arg(const std::string& flag, const std::string& text) {
  try {
    return parse_rational_arg(text);
  } catch (const SpecError&) {
    throw InputError{flag + ": malformed rational '" + text + "', expected p or p/q"};
  }
}

std::vector<Rational> grid_arg(const std::string& text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    out.push_back(rational_arg("--beta-grid", text.substr(start, comma == std::string::npos ? comma : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

/// "Stilde" -> "St", "Utildeinv" -> "Utinv", inside every factor of a product.
std::string canonical_matrix_text(std::string text) {
  for (std::size_t at; (at = text.find("tilde")) != std::string::npos;) text.replace(at, 5, "t");
  return text;
}

int report_numerator(const Emit& out, const NumeratorResult& r) {
  out.doc(polynomial_doc(r.numerator), r.numerator.to_string() + "\n");
  if (r.residual_ok) return kOk;
  std::cerr << "error: coefficients beyond the degree bound did not vanish:";
  for (const auto& [k, v] : r.residual) std::cerr << " [x^" << k << "] " << to_string(v);
  std::cerr << "\n";
  return kFailed;
}

std::string human_report(const std::vector<CheckReport>& reports) {
  std::string s;
  std::size_t passed = 0;
  for (const auto& r : reports) {
    std::string v(verdict_name(r.verdict));
    for (auto& c : v) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    char line[160];
    std::snprintf(line, sizeof line, "%-8s %-20s %8zu cases %10.3f ms\n", v.c_str(), r.id.c_str(), r.cases,
                  static_cast<double>(r.elapsed.count()) / 1000.0);
    s += line;
    if (r.counterexample)
      s += "  at " + r.counterexample->where + ": " + r.counterexample->left + " != " + r.counterexample->right + "\n";
    if (!r.note.empty() && r.verdict != Verdict::pass) s += "  " + r.note + "\n";
    if (r.verdict == Verdict::pass) ++passed;
  }
  s += std::to_string(passed) + "/" + std::to_string(reports.size()) + " checks passed\n";
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Riordan arrays, numerator polynomials, Lagrange series and transformation matrices."};
  app.require_subcommand(1, 1);
  Emit out;
  auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", out.json, "Print the canonical JSON document"); };
  std::function<int()> action;

  std::size_t n = 0;
  std::size_t guard = kDefaultGuard;
  std::size_t order = 10;
  std::string series_text, b_text = "1", flavor_text = "ordinary", beta_text = "1", phi_text = "1";

  auto* euler = app.add_subcommand("euler", "Euler polynomial A_n");
  euler->add_option("N", n, "Index")->required();
  json_flag(euler);
  euler->callback([&] {
    action = [&] { Poly p = euler_poly(n); out.doc(polynomial_doc(p), p.to_string() + "\n"); return kOk; };
  });

  auto* narayana = app.add_subcommand("narayana", "Narayana polynomial N_n");
  narayana->add_option("N", n, "Index")->required();
  json_flag(narayana);
  narayana->callback([&] {
    action = [&] { Poly p = narayana_poly(n); out.doc(polynomial_doc(p), p.to_string() + "\n"); return kOk; };
  });

  auto* narayana_b = app.add_subcommand("narayana-b", "Type-B Narayana polynomial");
  narayana_b->add_option("N", n, "Index")->required();
  json_flag(narayana_b);
  narayana_b->callback([&] {
    action = [&] { Poly p = narayana_b_poly(n); out.doc(polynomial_doc(p), p.to_string() + "\n"); return kOk; };
  });

  auto numerator_command = [&](const char* name, const char* help, ArrayFlavor flavor) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--series", series_text, "Series a(x) in the spec language")->required();
    sub->add_option("--n", n, "Diagonal index")->required();
    sub->add_option("--guard", guard, "Extra truncation order beyond 2n")->capture_default_str();
    json_flag(sub);
    sub->callback([&, flavor] {
      action = [&, flavor] {
        std::size_t ord = required_order(n, guard);
        Series a = series_arg("--series", series_text, ord);
        if (a.coeff(0) != 1) throw InputError{"--series: a(0) must be 1"};
        return report_numerator(out, numerator(make_pair(Series::one(ord), a), flavor, n, guard));
      };
    });
  };
  numerator_command("gep", "Generalized Euler polynomial of (1, x a(x))", ArrayFlavor::ordinary);
  numerator_command("gnp", "Generalized Narayana polynomial of (1, x a(x))", ArrayFlavor::exponential);

  auto* numer = app.add_subcommand("numerator", "Numerator polynomial of the n-th diagonal of (b, x a)");
  numer->add_option("--series", series_text, "Series a(x)")->required();
  numer->add_option("--b", b_text, "Series b(x)")->capture_default_str();
  numer->add_option("--n", n, "Diagonal index")->required();
  numer->add_option("--flavor", flavor_text, "ordinary or exponential")
      ->check(CLI::IsMember({"ordinary", "exponential"}))
      ->capture_default_str();
  numer->add_option("--guard", guard, "Extra truncation order beyond 2n")->capture_default_str();
  json_flag(numer);
  numer->callback([&] {
    action = [&] {
      std::size_t ord = required_order(n, guard);
      Series a = series_arg("--series", series_text, ord);
      Series b = series_arg("--b", b_text, ord);
      if (a.coeff(0) != 1) throw InputError{"--series: a(0) must be 1"};
      if (b.coeff(0) == 0) throw InputError{"--b: b(0) must be nonzero"};
      ArrayFlavor f = flavor_text == "ordinary" ? ArrayFlavor::ordinary : ArrayFlavor::exponential;
      return report_numerator(out, numerator(make_pair(b, a), f, n, guard));
    };
  });

  std::string matrix_text;
  std::optional<std::size_t> n_pos, n_opt, dim;
  auto* matrix = app.add_subcommand("matrix", "Transformation matrix, or a product such as Vt*Ut");
  matrix->add_option("NAME", matrix_text, "Matrix token or '*'-separated product")->required();
  matrix->add_option("INDEX", n_pos, "Index (same as --n)");
  matrix->add_option("--n", n_opt, "Index");
  matrix->add_option("--beta", beta_text, "Parameter beta")->capture_default_str();
  matrix->add_option("--dim", dim, "Size of E, R or Pt when given alone");
  json_flag(matrix);
  matrix->callback([&] {
    action = [&] {
      if (n_pos && n_opt && *n_pos != *n_opt) throw InputError{"matrix: index given twice with different values"};
      if (!n_pos && !n_opt) throw InputError{"matrix: index required (--n N)"};
      std::size_t idx = n_pos ? *n_pos : *n_opt;
      Rational beta = rational_arg("--beta", beta_text);
      std::string text = canonical_matrix_text(matrix_text);
      FiniteOperator m(1);
      try {
        auto fam = parse_family(text);
        m = fam && dim ? build({*fam, idx, beta}, dim) : evaluate_matrix_expression(text, idx, beta);
      } catch (const std::invalid_argument& e) {
        throw InputError{std::string("matrix: ") + e.what()};
      } catch (const std::domain_error& e) {
        throw InputError{std::string("matrix: ") + e.what()};
      }
      out.doc(matrix_doc(m), pretty_matrix(m));
      return kOk;
    };
  });

  auto* series = app.add_subcommand("series", "Coefficients of a series through x^order");
  series->add_option("SPEC", series_text, "Series in the spec language")->required();
  series->add_option("--order", order, "Truncation order")->capture_default_str();
  json_flag(series);
  series->callback([&] {
    action = [&] {
      Series s = series_arg("SPEC", series_text, order);
      out.doc(series_doc(s), s.to_string() + "\n");
      return kOk;
    };
  });

  auto* lagrange = app.add_subcommand("lagrange", "Generalized Lagrange series _(beta)a^phi");
  lagrange->add_option("--series", series_text, "Series a(x) with a(0) = 1")->required();
  lagrange->add_option("--beta", beta_text, "beta")->capture_default_str();
  lagrange->add_option("--phi", phi_text, "phi")->capture_default_str();
  lagrange->add_option("--order", order, "Truncation order")->capture_default_str();
  json_flag(lagrange);
  lagrange->callback([&] {
    action = [&] {
      Rational beta = rational_arg("--beta", beta_text), phi = rational_arg("--phi", phi_text);
      Series a = series_arg("--series", series_text, order);
      if (a.coeff(0) != 1) throw InputError{"--series: a(0) must be 1"};
      Series s = lagrange_associate(a, beta, phi);
      out.doc(series_doc(s), s.to_string() + "\n");
      return kOk;
    };
  });

  CheckParams params;
  std::vector<std::string> ids;
  std::string grid_text;
  bool list = false;
  auto* check = app.add_subcommand("check", "Run identity checks (all when no ids are given)");
  check->add_option("IDS", ids, "Check identifiers");
  check->add_option("--max-n", params.max_n, "Largest index")->capture_default_str();
  check->add_option("--matrix-max-n", params.matrix_max_n, "Largest index for matrix identities (0: max-n + 2)")
      ->capture_default_str();
  check->add_option("--beta-grid", grid_text, "Comma-separated rationals");
  check->add_option("--guard", params.guard, "Truncation guard")->capture_default_str();
  check->add_option("--order", params.order, "Series order for series identities")->capture_default_str();
  check->add_flag("--list", list, "List the check identifiers");
  json_flag(check);
  check->callback([&] {
    action = [&] {
      if (list) {
        for (const auto& id : check_ids()) std::cout << id << "\n";
        return kOk;
      }
      if (!grid_text.empty()) params.beta_grid = grid_arg(grid_text);
      for (const auto& id : ids)
        if (!is_check_id(id)) throw InputError{"check: unknown id '" + id + "'"};
      auto reports = run_suite(ids.empty() ? check_ids() : ids, params);
      OutputDoc d = report_doc(reports);
      out.doc(d, human_report(reports));
      return d.body["passed"].get<bool>() ? kOk : kFailed;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  try {
    return action();
  } catch (const InputError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
}
