#include "clutterlab/report.hpp"

#include <cstdio>
#include <set>
#include <sstream>

#include "clutterlab/error.hpp"

namespace clutterlab {

const PropertyVerdict* PropertyReport::find(std::string_view prop) const {
  for (const auto& p : properties) {
    if (p.prop == prop) return &p;
  }
  return nullptr;
}

ReportFormat parse_report_format(const std::string& name) {
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  if (name == "text") return ReportFormat::text;
  throw Error("unknown report format '" + name + "' (expected json, csv or text)");
}

Json report_to_json(const PropertyReport& report, bool with_timings) {
  Json j;
  j["clutter"] = report.clutter;
  j["dropped_vertices"] = report.dropped_vertices;
  Json props = Json::array();
  Json summary = Json::object();
  for (const auto& p : report.properties) {
    Json e;
    e["prop"] = p.prop;
    e["value"] = p.value;
    e["witness"] = p.witness;
    e["bound"] = p.bound;
    if (!p.detail.is_null()) e["detail"] = p.detail;
    if (p.derived) e["derived"] = true;
    props.push_back(std::move(e));
    summary[p.prop] = p.value;
  }
  j["properties"] = std::move(props);
  j["summary"] = std::move(summary);
  if (with_timings) {
    Json t = Json::object();
    for (const auto& [name, ms] : report.timings_ms) t[name] = ms;
    j["timings_ms"] = std::move(t);
  }
  j["tool_version"] = report.tool_version;
  return j;
}

namespace {

void reject_unknown(const Json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw Error(where + ": expected an object");
  for (const auto& [key, value] : j.items()) {
    if (!allowed.count(key)) throw Error(where + ": unknown field '" + key + "'");
  }
}

const Json& require(const Json& j, const std::string& key, const std::string& where) {
  if (!j.contains(key)) throw Error(where + ": missing field '" + key + "'");
  return j.at(key);
}

}  // namespace

PropertyReport report_from_json(const Json& j) {
  reject_unknown(j, {"clutter", "dropped_vertices", "properties", "summary", "timings_ms", "tool_version"}, "report");
  PropertyReport r;
  try {
    r.clutter = require(j, "clutter", "report").get<std::string>();
    if (j.contains("dropped_vertices")) r.dropped_vertices = j.at("dropped_vertices").get<std::vector<std::string>>();
    for (const auto& e : require(j, "properties", "report")) {
      reject_unknown(e, {"prop", "value", "witness", "bound", "detail", "derived"}, "property");
      PropertyVerdict p;
      p.prop = require(e, "prop", "property").get<std::string>();
      p.value = require(e, "value", "property");
      if (!p.value.is_boolean() && !p.value.is_number_integer()) throw Error("property: value must be a boolean or an integer");
      p.witness = require(e, "witness", "property");
      p.bound = require(e, "bound", "property");
      if (e.contains("detail")) p.detail = e.at("detail");
      if (e.contains("derived")) p.derived = e.at("derived").get<bool>();
      r.properties.push_back(std::move(p));
    }
    if (j.contains("summary")) {
      std::set<std::string> names;
      for (const auto& p : r.properties) names.insert(p.prop);
      const auto& s = j.at("summary");
      reject_unknown(s, names, "summary");
      for (const auto& p : r.properties) {
        if (s.contains(p.prop) && s.at(p.prop) != p.value) {
          throw Error("summary: '" + p.prop + "' disagrees with its property entry");
        }
      }
    }
  } catch (const nlohmann::json::exception& ex) {
    throw Error(std::string("report: ") + ex.what());
  }
  if (j.contains("timings_ms")) {
    for (const auto& [name, ms] : j.at("timings_ms").items()) r.timings_ms.emplace_back(name, ms.get<double>());
  }
  if (j.contains("tool_version")) r.tool_version = j.at("tool_version").get<std::string>();
  return r;
}

Json reports_document(const std::vector<PropertyReport>& reports, bool with_timings) {
  Json doc;
  doc["version"] = kReportSchemaVersion;
  doc["reports"] = Json::array();
  for (const auto& r : reports) doc["reports"].push_back(report_to_json(r, with_timings));
  return doc;
}

std::vector<PropertyReport> parse_reports_document(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(std::string("report document: ") + ex.what());
  }
  reject_unknown(doc, {"version", "reports", "scan", "verification"}, "report document");
  if (!doc.contains("version") || doc["version"] != kReportSchemaVersion) {
    throw Error("report document: unsupported schema version");
  }
  std::vector<PropertyReport> out;
  for (const auto& r : require(doc, "reports", "report document")) out.push_back(report_from_json(r));
  return out;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string compact(const Json& j) { return j.is_null() ? "" : j.dump(); }

// One-line form of the clutter text: "x1 x2 | x2 x3".
std::string edges_line(const std::string& clutter_text) {
  std::istringstream in(clutter_text);
  std::string line, out;
  while (std::getline(in, line)) {
    if (line.rfind("e:", 0) != 0) continue;
    auto body = line.substr(2);
    body.erase(0, body.find_first_not_of(' '));
    if (!out.empty()) out += " | ";
    out += body;
  }
  return out.empty() ? "(no edges)" : out;
}

}  // namespace

std::string emit_report(const std::vector<PropertyReport>& reports, ReportFormat format) {
  switch (format) {
    case ReportFormat::json:
      return reports_document(reports).dump();
    case ReportFormat::csv: {
      std::string out = "clutter,prop,value,witness,bound\n";
      for (const auto& r : reports) {
        const std::string name = edges_line(r.clutter);
        for (const auto& p : r.properties) {
          out += csv_field(name) + "," + csv_field(p.prop) + "," + p.value.dump() + "," +
                 csv_field(compact(p.witness)) + "," + csv_field(compact(p.bound)) + "\n";
        }
      }
      return out;
    }
    case ReportFormat::text: {
      std::string out;
      for (const auto& r : reports) {
        out += "clutter: " + edges_line(r.clutter) + "\n";
        if (!r.dropped_vertices.empty()) {
          out += "  dropped:";
          for (const auto& v : r.dropped_vertices) out += " " + v;
          out += "\n";
        }
        for (const auto& p : r.properties) {
          out += "  " + p.prop + ": " + (p.value.is_boolean() ? (p.value.get<bool>() ? "yes" : "no") : p.value.dump());
          if (p.derived) out += " (derived)";
          if (!p.bound.is_null()) out += "  bound " + p.bound.dump();
          if (!p.witness.is_null()) out += "  witness " + p.witness.dump();
          out += "\n";
        }
      }
      return out;
    }
  }
  return {};
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

std::string report_hash(const std::vector<PropertyReport>& reports) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a(reports_document(reports, false).dump())));
  return buf;
}

}  // namespace clutterlab
