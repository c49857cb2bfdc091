#include <doctest.h>

#include "eulnar/catalog.hpp"
#include "eulnar/output.hpp"
#include "eulnar/riordan.hpp"
#include "eulnar/transforms.hpp"
#include "support.hpp"

using namespace eulnar;
using namespace testing;

namespace {

void round_trips(const OutputDoc& d) {
  std::string text = render(d);
  OutputDoc back = parse_doc(text);
  CHECK(back.kind == d.kind);
  CHECK(render(back) == text);
}

}  // namespace

TEST_CASE("polynomial documents") {
  OutputDoc d = polynomial_doc(euler_poly(4));
  CHECK(d.body["kind"] == "polynomial");
  CHECK(d.body["coeffs"] == nlohmann::ordered_json::array({"0", "1", "11", "11", "1"}));
  round_trips(d);
  CHECK(poly_from_doc(parse_doc(render(d))) == euler_poly(4));
  Poly q = P({Q(-1, 3), 0, Q(5, 2)});
  CHECK(poly_from_doc(parse_doc(render(polynomial_doc(q)))) == q);
}

TEST_CASE("matrix documents") {
  FiniteOperator m = build({Family::H, 2, 1});
  OutputDoc d = matrix_doc(m);
  CHECK(d.body["dim"] == 3);
  CHECK(d.body["entries"][0][0] == "5/2");
  round_trips(d);
  CHECK(matrix_from_doc(parse_doc(render(d))) == m);
  FiniteOperator r = raising(3);
  OutputDoc rd = matrix_doc(r);
  CHECK_FALSE(rd.body.contains("dim"));
  CHECK(rd.body["rows"] == 4);
  CHECK(rd.body["cols"] == 3);
  CHECK(matrix_from_doc(parse_doc(render(rd))) == r);
}

TEST_CASE("series documents") {
  Series s = catalan_series(6);
  OutputDoc d = series_doc(s);
  CHECK(d.body["order"] == 6);
  round_trips(d);
  CHECK(series_from_doc(parse_doc(render(d))) == s);
}

TEST_CASE("report documents") {
  CheckReport ok;
  ok.id = "T1";
  ok.verdict = Verdict::pass;
  ok.cases = 3;
  CheckReport bad;
  bad.id = "T2";
  bad.verdict = Verdict::fail;
  bad.counterexample = Counterexample{"n=2", "1", "2"};
  OutputDoc d = report_doc({ok, bad});
  CHECK(d.body["passed"] == false);
  CHECK(d.body["checks"][1]["counterexample"]["where"] == "n=2");
  CHECK(d.body["checks"][0]["counterexample"].is_null());
  round_trips(d);
  CHECK(report_doc({ok}).body["passed"] == true);
  CHECK(report_doc({}).body["passed"] == true);
}

TEST_CASE("malformed documents are rejected") {
  CHECK_THROWS_AS(parse_doc("{"), std::invalid_argument);
  CHECK_THROWS_AS(parse_doc("[]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_doc(R"({"kind":"vector"})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_doc(R"({"kind":"polynomial","coeffs":["2/4"]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_doc(R"({"kind":"polynomial","coeffs":[1]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_doc(R"({"kind":"polynomial","coeffs":["1","0"]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_doc(R"({"kind":"polynomial","coeffs":["0.5"]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_doc(R"({"kind":"matrix","dim":2,"rows":2,"cols":2,"entries":[["1","0"]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_doc(R"({"kind":"series","order":2,"coeffs":["1"]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_doc(R"({"kind":"report","passed":true,"checks":[{"id":"T99","verdict":"pass"}]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_doc(R"({"kind":"report","passed":true,"checks":[{"id":"T1","verdict":"maybe"}]})"),
                  std::invalid_argument);
}

TEST_CASE("pretty matrices factor out the common scalar") {
  CHECK(pretty_matrix(build({Family::St, 2, 1})) == "6 *\n1 0\n1 2\n");
  CHECK(pretty_matrix(build({Family::Ut, 2, 1})) == "1/2 *\n 1  1\n-1  1\n");
  CHECK(pretty_matrix(FiniteOperator(2)) == "0 0\n0 0\n");
  CHECK(pretty_matrix(FiniteOperator::identity(2)) == "1 0\n0 1\n");
}
