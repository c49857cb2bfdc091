#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "eulnar/finite_operator.hpp"
#include "eulnar/polynomial.hpp"
#include "eulnar/riordan.hpp"
#include "eulnar/series.hpp"
#include "eulnar/verify.hpp"

namespace eulnar::detail {

inline std::string render(const Rational& r) { return to_string(r); }
inline std::string render(const Poly& p) { return p.to_string(); }
inline std::string render(const Series& s) { return s.to_string(); }
inline std::string render(const FiniteOperator& m) { return m.to_string(); }
inline std::string render(bool b) { return b ? "true" : "false"; }

/// Collects case counts and the first failure of a check body.
class Recorder {
 public:
  explicit Recorder(const CheckParams& params) : params_(params) {}

  const CheckParams& params() const { return params_; }

  template <class L, class R>
  bool equal(const std::string& where, const L& left, const R& right) {
    ++cases_;
    if (left == right) return true;
    fail(where, render(left), render(right));
    return false;
  }

  bool expect(const std::string& where, bool ok, const std::string& detail = "") {
    ++cases_;
    if (!ok) fail(where, detail.empty() ? "false" : detail, "true");
    return ok;
  }

  /// Fails on a numerator whose trailing coefficients did not vanish.
  bool residual(const std::string& where, const NumeratorResult& r);

  void fail(const std::string& where, std::string left, std::string right) {
    if (!first_) first_ = Counterexample{where, std::move(left), std::move(right)};
  }

  bool failed() const { return first_.has_value(); }
  std::size_t cases() const { return cases_; }
  const std::optional<Counterexample>& first() const { return first_; }

 private:
  const CheckParams& params_;
  std::size_t cases_ = 0;
  std::optional<Counterexample> first_;
};

using CheckBody = std::function<void(Recorder&)>;
using Registry = std::map<std::string, CheckBody>;

void register_matrix_checks(Registry& r);
void register_pipeline_checks(Registry& r);
void register_example_checks(Registry& r);

std::string tag(const std::string& what, std::size_t n);
std::string tag(const std::string& what, std::size_t n, const Rational& beta);

/// Series order that lets numerator() run up to index n.
std::size_t pipeline_order(const CheckParams& p, std::size_t n);

}  // namespace eulnar::detail
