#include "eulnar/output.hpp"

#include <algorithm>
#include <stdexcept>

namespace eulnar {

namespace {

using Json = nlohmann::ordered_json;

Json rational_array(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

Rational canonical_rational(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("rational must be a string");
  std::string s = j.get<std::string>();
  auto q = parse_rational(s);
  if (!q || to_string(*q) != s) throw std::invalid_argument("non-canonical rational '" + s + "'");
  return *q;
}

std::vector<Rational> rationals(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& e : j) out.push_back(canonical_rational(e));
  return out;
}

std::size_t count(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned()) throw std::invalid_argument(std::string("missing count '") + key + "'");
  return j[key].get<std::size_t>();
}

void validate(const OutputDoc& doc) {
  const Json& b = doc.body;
  switch (doc.kind) {
    case OutputDoc::Kind::polynomial: {
      auto c = rationals(b.at("coeffs"));
      if (!c.empty() && sgn(c.back()) == 0) throw std::invalid_argument("trailing zero coefficient");
      break;
    }
    case OutputDoc::Kind::matrix: {
      std::size_t r = count(b, "rows"), c = count(b, "cols");
      if (r == c && count(b, "dim") != r) throw std::invalid_argument("dim disagrees with shape");
      const Json& e = b.at("entries");
      if (!e.is_array() || e.size() != r) throw std::invalid_argument("entries must have one array per row");
      for (const auto& row : e)
        if (rationals(row).size() != c) throw std::invalid_argument("row length disagrees with cols");
      break;
    }
    case OutputDoc::Kind::series: {
      std::size_t order = count(b, "order");
      if (rationals(b.at("coeffs")).size() != order + 1) throw std::invalid_argument("series needs order + 1 coefficients");
      break;
    }
    case OutputDoc::Kind::report: {
      if (!b.at("passed").is_boolean()) throw std::invalid_argument("'passed' must be boolean");
      for (const auto& c : b.at("checks")) {
        std::string v = c.at("verdict").get<std::string>();
        if (v != "pass" && v != "fail" && v != "not_run") throw std::invalid_argument("unknown verdict '" + v + "'");
        if (!is_check_id(c.at("id").get<std::string>())) throw std::invalid_argument("unknown check id");
      }
      break;
    }
  }
}

Integer lcm_of_denominators(const FiniteOperator& m) {
  Integer l = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den_mpz_t());
  return l;
}

}  // namespace

std::string_view kind_name(OutputDoc::Kind k) {
  switch (k) {
    case OutputDoc::Kind::polynomial: return "polynomial";
    case OutputDoc::Kind::matrix: return "matrix";
    case OutputDoc::Kind::series: return "series";
    case OutputDoc::Kind::report: return "report";
  }
  return "unknown";
}

OutputDoc polynomial_doc(const Poly& p) {
  OutputDoc d{OutputDoc::Kind::polynomial, Json::object()};
  d.body["kind"] = "polynomial";
  d.body["coeffs"] = rational_array(p.coeffs());
  return d;
}

OutputDoc matrix_doc(const FiniteOperator& m) {
  OutputDoc d{OutputDoc::Kind::matrix, Json::object()};
  d.body["kind"] = "matrix";
  if (m.square()) d.body["dim"] = m.rows();
  d.body["rows"] = m.rows();
  d.body["cols"] = m.cols();
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) entries.push_back(rational_array(m.row(i)));
  d.body["entries"] = entries;
  return d;
}

OutputDoc series_doc(const Series& s) {
  OutputDoc d{OutputDoc::Kind::series, Json::object()};
  d.body["kind"] = "series";
  d.body["order"] = s.order();
  d.body["coeffs"] = rational_array(s.coeffs());
  return d;
}

OutputDoc report_doc(const std::vector<CheckReport>& reports) {
  OutputDoc d{OutputDoc::Kind::report, Json::object()};
  d.body["kind"] = "report";
  bool passed = std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.verdict == Verdict::pass; });
  d.body["passed"] = passed;
  Json checks = Json::array();
  for (const auto& r : reports) {
    Json c = Json::object();
    c["id"] = r.id;
    c["verdict"] = std::string(verdict_name(r.verdict));
    c["cases"] = r.cases;
    Json params = Json::object();
    params["max_n"] = r.params.max_n;
    params["matrix_max_n"] = r.params.matrix_bound();
    params["beta_grid"] = rational_array(r.params.beta_grid);
    params["guard"] = r.params.guard;
    params["order"] = r.params.order;
    c["params"] = params;
    if (r.counterexample) {
      Json ce = Json::object();
      ce["where"] = r.counterexample->where;
      ce["left"] = r.counterexample->left;
      ce["right"] = r.counterexample->right;
      c["counterexample"] = ce;
    } else {
      c["counterexample"] = nullptr;
    }
    if (!r.note.empty()) c["note"] = r.note;
    c["elapsed_us"] = r.elapsed.count();
    checks.push_back(c);
  }
  d.body["checks"] = checks;
  return d;
}

std::string render(const OutputDoc& doc) { return doc.body.dump(2); }

OutputDoc parse_doc(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) throw std::invalid_argument("missing 'kind'");
  std::string kind = j["kind"].get<std::string>();
  OutputDoc d;
  if (kind == "polynomial") d.kind = OutputDoc::Kind::polynomial;
  else if (kind == "matrix") d.kind = OutputDoc::Kind::matrix;
  else if (kind == "series") d.kind = OutputDoc::Kind::series;
  else if (kind == "report") d.kind = OutputDoc::Kind::report;
  else throw std::invalid_argument("unknown kind '" + kind + "'");
  d.body = std::move(j);
  try {
    validate(d);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed document: ") + e.what());
  }
  return d;
}

Poly poly_from_doc(const OutputDoc& doc) {
  if (doc.kind != OutputDoc::Kind::polynomial) throw std::invalid_argument("not a polynomial document");
  return Poly(rationals(doc.body.at("coeffs")));
}

FiniteOperator matrix_from_doc(const OutputDoc& doc) {
  if (doc.kind != OutputDoc::Kind::matrix) throw std::invalid_argument("not a matrix document");
  std::size_t r = count(doc.body, "rows"), c = count(doc.body, "cols");
  FiniteOperator m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    auto row = rationals(doc.body.at("entries").at(i));
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = row.at(j);
  }
  return m;
}

Series series_from_doc(const OutputDoc& doc) {
  if (doc.kind != OutputDoc::Kind::series) throw std::invalid_argument("not a series document");
  return Series(rationals(doc.body.at("coeffs")), count(doc.body, "order"));
}

std::string pretty_matrix(const FiniteOperator& m) {
  Integer den = lcm_of_denominators(m);
  Integer g = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rational scaled = m.at(i, j) * den;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_num_mpz_t());
    }
  Rational scale = g == 0 ? Rational(1) : make_rational(g, den);
  std::vector<std::vector<std::string>> cells(m.rows());
  std::size_t width = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rational v = m.at(i, j) / scale;
      cells[i].push_back(to_string(v));
      width = std::max(width, cells[i].back().size());
    }
  std::string out;
  if (scale != 1) out += to_string(scale) + " *\n";
  for (const auto& row : cells) {
    std::string line;
    for (const auto& c : row) line += (line.empty() ? "" : " ") + std::string(width - c.size(), ' ') + c;
    out += line + "\n";
  }
  return out;
}

}  // namespace eulnar
