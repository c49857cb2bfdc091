#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eulnar/rational.hpp"

namespace eulnar {

struct CheckParams {
  std::size_t max_n = 6;
  /// Index bound for pure matrix identities; 0 means max_n + 2.
  std::size_t matrix_max_n = 0;
  std::vector<Rational> beta_grid = default_beta_grid();
  std::size_t guard = 4;
  /// Series order for the Lagrange-layer and example identities.
  std::size_t order = 12;

  std::size_t matrix_bound() const { return matrix_max_n ? matrix_max_n : max_n + 2; }
  static std::vector<Rational> default_beta_grid();
};

enum class Verdict { pass, fail, not_run };

std::string_view verdict_name(Verdict v);

struct Counterexample {
  std::string where;
  std::string left;
  std::string right;
};

struct CheckReport {
  std::string id;
  CheckParams params;
  Verdict verdict = Verdict::not_run;
  std::optional<Counterexample> counterexample;
  std::size_t cases = 0;
  std::string note;
  std::chrono::microseconds elapsed{0};
};

/// The fixed catalog of check identifiers, in canonical order.
const std::vector<std::string>& check_ids();
bool is_check_id(std::string_view id);

/// Runs one check. Throws std::invalid_argument for an unknown id. Parameters
/// beyond the supported range give Verdict::not_run.
CheckReport run_check(std::string_view id, const CheckParams& params);

/// Runs the checks concurrently; the result follows the order of ids.
std::vector<CheckReport> run_suite(const std::vector<std::string>& ids, const CheckParams& params);

}  // namespace eulnar
