#pragma once

// Property reports and their JSON / CSV / text serializations.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

namespace clutterlab {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char* kToolVersion = "clutterlab 1.0.0";

struct PropertyVerdict {
  std::string prop;
  /// Boolean for yes/no properties, an integer for numeric invariants.
  Json value = false;
  /// null unless the verdict is negative.
  Json witness;
  /// The range an infinite-quantifier property was checked over; null when exact.
  Json bound;
  /// Supporting data (vertex lists, invariants); null when absent.
  Json detail;
  /// True for verdicts of tested identities the source does not state.
  bool derived = false;

  /// True iff the verdict is a boolean false.
  bool negative() const { return value.is_boolean() && !value.get<bool>(); }
  friend bool operator==(const PropertyVerdict&, const PropertyVerdict&) = default;
};

struct PropertyReport {
  /// Canonical text of the clutter.
  std::string clutter;
  std::vector<std::string> dropped_vertices;
  std::vector<PropertyVerdict> properties;
  /// Milliseconds per property; excluded from the determinism hash.
  std::vector<std::pair<std::string, double>> timings_ms;
  std::string tool_version = kToolVersion;

  const PropertyVerdict* find(std::string_view prop) const;
  friend bool operator==(const PropertyReport&, const PropertyReport&) = default;
};

enum class ReportFormat { json, csv, text };

ReportFormat parse_report_format(const std::string& name);

Json report_to_json(const PropertyReport& report, bool with_timings = true);
/// Throws Error on a schema mismatch, including unknown fields.
PropertyReport report_from_json(const Json& j);

/// Wraps reports as {"version":1,"reports":[...]}; extra top-level members
/// are appended after "reports".
Json reports_document(const std::vector<PropertyReport>& reports, bool with_timings = true);
std::vector<PropertyReport> parse_reports_document(std::string_view text);

std::string emit_report(const std::vector<PropertyReport>& reports, ReportFormat format);

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view bytes);
/// Hash of the JSON document without timing fields, as 16 hex digits.
std::string report_hash(const std::vector<PropertyReport>& reports);

}  // namespace clutterlab
