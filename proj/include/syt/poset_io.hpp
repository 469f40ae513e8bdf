#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include <json.hpp>

#include "syt/poset.hpp"

namespace syt {

enum class ExportFormat { dot, json };

inline ExportFormat parse_export_format(const std::string& s) {
  if (s == "dot") return ExportFormat::dot;
  if (s == "json") return ExportFormat::json;
  throw error("BadRange", "unknown export format '" + s + "'");
}

namespace detail {
inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}
}  // namespace detail

// Elements sorted by label, covers only; byte-identical across runs.
inline std::string export_poset(const Poset& p, ExportFormat format) {
  std::vector<std::string> elems = p.elements();
  std::sort(elems.begin(), elems.end());
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& [a, b] : p.covers()) covers.emplace_back(p.label(a), p.label(b));
  std::sort(covers.begin(), covers.end());
  if (format == ExportFormat::dot) {
    std::string out = "digraph poset {\n  rankdir=BT;\n";
    for (const auto& e : elems) out += "  \"" + detail::dot_escape(e) + "\";\n";
    for (const auto& [a, b] : covers)
      out += "  \"" + detail::dot_escape(a) + "\" -> \"" + detail::dot_escape(b) + "\";\n";
    out += "}\n";
    return out;
  }
  nlohmann::ordered_json j;
  j["elements"] = elems;
  j["covers"] = nlohmann::ordered_json::array();
  for (const auto& [a, b] : covers) j["covers"].push_back({a, b});
  return j.dump() + "\n";
}

// Accepts the JSON schema {"elements": [...], "covers": [[a,b]...]}.
inline Poset parse_poset_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.contains("elements") || !j.contains("covers"))
    throw error("InvalidPoset", "JSON poset needs 'elements' and 'covers'");
  std::vector<std::string> elements = j["elements"].get<std::vector<std::string>>();
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& c : j["covers"]) {
    if (!c.is_array() || c.size() != 2) throw error("InvalidPoset", "cover is not a pair");
    covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
  }
  return Poset::build(std::move(elements), covers);
}

}  // namespace syt
