#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "eulnar/finite_operator.hpp"
#include "eulnar/polynomial.hpp"
#include "eulnar/series.hpp"
#include "eulnar/verify.hpp"

namespace eulnar {

/// Machine-readable result. Every rational is a canonical string "p" or "p/q".
struct OutputDoc {
  enum class Kind { polynomial, matrix, series, report };
  Kind kind = Kind::polynomial;
  nlohmann::ordered_json body;
};

std::string_view kind_name(OutputDoc::Kind k);

OutputDoc polynomial_doc(const Poly& p);
/// Row-major entries; "dim" for square operators, "rows" and "cols" always.
OutputDoc matrix_doc(const FiniteOperator& m);
OutputDoc series_doc(const Series& s);
OutputDoc report_doc(const std::vector<CheckReport>& reports);

/// Canonical serialization (two-space indent, fixed key order).
std::string render(const OutputDoc& doc);

/// Parses and validates a document; throws std::invalid_argument on
/// malformed JSON, unknown kinds or non-canonical rationals.
OutputDoc parse_doc(std::string_view text);

Poly poly_from_doc(const OutputDoc& doc);
FiniteOperator matrix_from_doc(const OutputDoc& doc);
Series series_from_doc(const OutputDoc& doc);

/// Human-readable matrix: the common scalar factor pulled out, then integer rows.
std::string pretty_matrix(const FiniteOperator& m);

}  // namespace eulnar
