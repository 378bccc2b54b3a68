#pragma once

// Text, JSON and CSV rendering of evaluation and verification results.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "rrcf/continued_fraction.hpp"
#include "rrcf/formal_series.hpp"
#include "rrcf/identities.hpp"
#include "rrcf/special_values.hpp"

namespace rrcf {

enum class Format { Text, Json, Csv };
/// "text", "json" or "csv"; throws DomainError otherwise.
Format parse_format(std::string_view name);

/// A result in all three shapes: JSON object, header lines and a table.
struct Document {
  nlohmann::ordered_json json;
  std::vector<std::pair<std::string, std::string>> summary;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  /// False when the table only repeats the summary; CSV still uses it.
  bool text_table = true;
};

/// Several documents render as a JSON array, concatenated text blocks, or one
/// CSV table under the first document's header.
std::string render(const std::vector<Document>& docs, Format format);
std::string render(const Document& doc, Format format);

/// Decimal string of a deviation, 6 significant digits.
std::string deviation_string(const BigReal& x);

Document document(const VerificationReport& report);
Document document(const std::vector<ValueCheck>& checks, const PrecisionContext& ctx);
Document registry_document();
Document document(const SchurClassification& c);
Document document(const AsymptoticRecord& r, bool with_polynomial, const PrecisionContext& ctx);
Document document(const JimsRecord& r, const PrecisionContext& ctx);
Document series_document(const std::string& which, const IntegerSeries& s);

}  // namespace rrcf
