#include "eulnar/verify.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

#include "checks.hpp"

namespace eulnar {

namespace detail {

bool Recorder::residual(const std::string& where, const NumeratorResult& r) {
  ++cases_;
  if (r.residual_ok) return true;
  std::string left = "residual";
  for (const auto& [k, v] : r.residual) left += " x^" + std::to_string(k) + ":" + to_string(v);
  if (r.residual.empty()) left += " window too short";
  fail(where, left, "0");
  return false;
}

std::string tag(const std::string& what, std::size_t n) { return what + " n=" + std::to_string(n); }

std::string tag(const std::string& what, std::size_t n, const Rational& beta) {
  return tag(what, n) + " beta=" + to_string(beta);
}

std::size_t pipeline_order(const CheckParams& p, std::size_t n) { return required_order(n, p.guard); }

}  // namespace detail

namespace {

constexpr std::size_t kMaxN = 12;
constexpr std::size_t kMaxMatrixN = 16;
constexpr std::size_t kMaxOrder = 40;
constexpr std::size_t kMaxGuard = 16;

const detail::Registry& registry() {
  static const detail::Registry r = [] {
    detail::Registry out;
    detail::register_matrix_checks(out);
    detail::register_pipeline_checks(out);
    detail::register_example_checks(out);
    return out;
  }();
  return r;
}

std::string limit_violation(const CheckParams& p) {
  if (p.max_n > kMaxN) return "max_n above " + std::to_string(kMaxN);
  if (p.matrix_bound() > kMaxMatrixN) return "matrix bound above " + std::to_string(kMaxMatrixN);
  if (p.order > kMaxOrder) return "series order above " + std::to_string(kMaxOrder);
  if (p.guard > kMaxGuard) return "guard above " + std::to_string(kMaxGuard);
  if (p.guard == 0) return "guard must be positive";
  return {};
}

}  // namespace

std::vector<Rational> CheckParams::default_beta_grid() {
  return {Rational(-2), Rational(-1), make_rational(-1, 2), Rational(0),
          make_rational(1, 2), Rational(1), Rational(2), Rational(3)};
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::not_run: return "not_run";
  }
  return "unknown";
}

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (int k = 1; k <= 21; ++k) v.push_back("T" + std::to_string(k));
    v.insert(v.end(), {"R1", "R2"});
    for (int k = 1; k <= 9; ++k) v.push_back("EX" + std::to_string(k));
    v.insert(v.end(), {"STIRLING", "DUALBASIS", "GFNARAYANA", "COLSUM_A", "GROUPLAW_G", "REDUCE_A", "REDUCE_G",
                       "SUMID1", "SUMID2", "REVERSAL_GEP", "REVERSAL_GNP", "PSEUDOINV", "CATALOG_CONSISTENCY",
                       "ORACLE_ARRAY", "LAGRANGE"});
    return v;
  }();
  return ids;
}

bool is_check_id(std::string_view id) {
  const auto& ids = check_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

CheckReport run_check(std::string_view id, const CheckParams& params) {
  auto it = registry().find(std::string(id));
  if (it == registry().end()) throw std::invalid_argument("unknown check id '" + std::string(id) + "'");
  CheckReport report;
  report.id = std::string(id);
  report.params = params;
  if (std::string why = limit_violation(params); !why.empty()) {
    report.verdict = Verdict::not_run;
    report.note = why;
    return report;
  }
  auto start = std::chrono::steady_clock::now();
  detail::Recorder rec(params);
  try {
    it->second(rec);
  } catch (const std::exception& e) {
    rec.fail("exception", e.what(), "no exception");
  }
  report.elapsed =
      std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
  report.cases = rec.cases();
  report.counterexample = rec.first();
  report.verdict = rec.failed() ? Verdict::fail : Verdict::pass;
  return report;
}

std::vector<CheckReport> run_suite(const std::vector<std::string>& ids, const CheckParams& params) {
  for (const auto& id : ids)
    if (!is_check_id(id)) throw std::invalid_argument("unknown check id '" + id + "'");
  std::vector<std::future<CheckReport>> jobs;
  jobs.reserve(ids.size());
  for (const auto& id : ids) jobs.push_back(std::async(std::launch::async, [id, &params] { return run_check(id, params); }));
  std::vector<CheckReport> out;
  out.reserve(ids.size());
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace eulnar
