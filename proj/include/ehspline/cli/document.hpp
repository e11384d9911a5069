#pragma once

#include <cmath>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ehspline/cli/errors.hpp"
#include "ehspline/curve.hpp"
#include "ehspline/numeric.hpp"

namespace ehspline::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kDocumentVersion = 1;

/// Interchange format of closed curves:
/// {"version": 1, "M": 8, "omega0_mode": "auto", "points": [[x, y], ...],
///  "tangents": [[dx, dy], ...]}
struct CurveDocument {
  int version = kDocumentVersion;
  std::size_t M = 0;
  std::string omega0_mode = "auto";
  std::vector<Vec2> points;
  std::vector<Vec2> tangents;

  /// Throws std::domain_error for M < 3.
  [[nodiscard]] ClosedHermiteCurve curve() const { return {points, tangents}; }

  [[nodiscard]] static CurveDocument from_curve(const ClosedHermiteCurve& c) {
    CurveDocument d;
    d.M = c.period();
    d.points = c.points();
    d.tangents = c.tangents();
    return d;
  }
};

namespace detail {

inline std::vector<Vec2> read_pairs(const Json& j, const char* key) {
  if (!j.contains(key)) throw DocumentError(std::string("missing field '") + key + "'");
  const Json& arr = j.at(key);
  if (!arr.is_array()) throw DocumentError(std::string("'") + key + "' must be an array");
  std::vector<Vec2> out;
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const Json& e = arr[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw DocumentError(std::string("'") + key + "[" + std::to_string(i) +
                          "]' must be a pair of numbers");
    }
    out.push_back({e[0].get<double>(), e[1].get<double>()});
  }
  return out;
}

inline Json pairs_to_json(const std::vector<Vec2>& v) {
  Json arr = Json::array();
  for (const Vec2& p : v) arr.push_back(Json::array({p.x, p.y}));
  return arr;
}

}  // namespace detail

[[nodiscard]] inline CurveDocument parse_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DocumentError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw DocumentError("document must be a JSON object");
  CurveDocument d;
  if (!j.contains("version") || !j["version"].is_number_integer()) {
    throw DocumentError("missing or non-integer field 'version'");
  }
  d.version = j["version"].get<int>();
  if (d.version != kDocumentVersion) {
    throw DocumentError("unsupported document version " + std::to_string(d.version));
  }
  if (!j.contains("M") || !j["M"].is_number_unsigned()) {
    throw DocumentError("missing or non-integer field 'M'");
  }
  d.M = j["M"].get<std::size_t>();
  if (j.contains("omega0_mode")) {
    if (!j["omega0_mode"].is_string() || j["omega0_mode"].get<std::string>() != "auto") {
      throw DocumentError("omega0_mode must be \"auto\"");
    }
  }
  d.points = detail::read_pairs(j, "points");
  d.tangents = detail::read_pairs(j, "tangents");
  if (d.points.size() != d.M || d.tangents.size() != d.M) {
    throw DocumentError("points and tangents must both have length M = " + std::to_string(d.M));
  }
  return d;
}

[[nodiscard]] inline CurveDocument read_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

[[nodiscard]] inline Json document_to_json(const CurveDocument& d) {
  Json j;
  j["version"] = d.version;
  j["M"] = d.M;
  j["omega0_mode"] = d.omega0_mode;
  j["points"] = detail::pairs_to_json(d.points);
  j["tangents"] = detail::pairs_to_json(d.tangents);
  return j;
}

/// Top-level object with one member per line and arrays of pairs one pair
/// per line. Numbers use the shortest representation that round-trips exactly.
[[nodiscard]] inline std::string dump_json(const Json& j) {
  if (!j.is_object()) return j.dump() + "\n";
  std::string out = "{\n";
  std::size_t k = 0;
  for (const auto& [key, value] : j.items()) {
    out += "  " + Json(key).dump() + ": ";
    if (value.is_array() && !value.empty() && value.front().is_array()) {
      out += "[\n";
      for (std::size_t i = 0; i < value.size(); ++i) {
        out += "    " + value[i].dump(-1, ' ', false) + (i + 1 < value.size() ? ",\n" : "\n");
      }
      out += "  ]";
    } else {
      out += value.dump();
    }
    out += ++k < j.size() ? ",\n" : "\n";
  }
  return out + "}\n";
}

}  // namespace ehspline::cli
