#pragma once

#include <nlohmann/json.hpp>

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fockkit/combinatorics.hpp"
#include "fockkit/error.hpp"
#include "fockkit/fock_space.hpp"
#include "fockkit/rational.hpp"

namespace fockkit {

// std::map-backed objects, so keys come out sorted.
using Json = nlohmann::json;

inline Json to_json(const Rational& x) { return to_string(x); }

inline Json to_json(const IntTuple& t) { return Json(t); }

inline Json to_json(const Partition& p) { return Json(p.parts()); }

inline Json to_json(const MultiPartition& lam) {
  Json out = Json::array();
  for (const auto& c : lam.components()) out.push_back(to_json(c));
  return out;
}

inline Json to_json(const Composition& nu) { return Json(nu.parts()); }

inline Json to_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

inline Json to_json(const DecompMatrix& d) {
  Json rows = Json::array(), cols = Json::array();
  for (const auto& r : d.rows) rows.push_back(to_json(r));
  for (const auto& c : d.cols) cols.push_back(to_json(c));
  return Json{{"rows", rows}, {"cols", cols}, {"entries", d.entries}};
}

inline Json to_json(const WedgeVector& v) {
  Json out = Json::array();
  for (const auto& [t, c] : v.terms()) out.push_back(Json{{"tuple", t}, {"coeff", c}});
  return out;
}

inline MultiPartition multipartition_from_json(const Json& j) {
  require(j.is_array(), "multipartition must be an array of arrays");
  std::vector<Partition> comps;
  for (const auto& c : j) {
    require(c.is_array(), "multipartition components must be arrays");
    std::vector<int> parts;
    for (const auto& x : c) {
      require(x.is_number_integer(), "partition parts must be integers");
      parts.push_back(x.get<int>());
    }
    comps.emplace_back(std::move(parts));
  }
  return MultiPartition(std::move(comps));
}

inline MultiPartition parse_multipartition(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(errc::parse, "bad multipartition JSON '" + text + "'");
  return multipartition_from_json(j);
}

// ---------------------------------------------------------------------------
// CSV (RFC 4180).

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string csv_scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

inline void csv_row(std::ostream& os, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_field(cells[i]);
  os << "\r\n";
}

// Matrices become a labeled grid, arrays of objects a table with the union
// of keys as header, objects a key/value listing.
inline std::string to_csv(const Json& j) {
  std::ostringstream os;
  if (j.is_object() && j.contains("rows") && j.contains("cols") && j.contains("entries")) {
    std::vector<std::string> head{""};
    for (const auto& c : j["cols"]) head.push_back(csv_scalar(c));
    csv_row(os, head);
    for (std::size_t i = 0; i < j["rows"].size(); ++i) {
      std::vector<std::string> row{csv_scalar(j["rows"][i])};
      for (const auto& v : j["entries"][i]) row.push_back(csv_scalar(v));
      csv_row(os, row);
    }
  } else if (j.is_array() && !j.empty() && j[0].is_object()) {
    std::set<std::string> keys;
    for (const auto& o : j)
      for (const auto& [k, v] : o.items()) keys.insert(k);
    csv_row(os, {keys.begin(), keys.end()});
    for (const auto& o : j) {
      std::vector<std::string> row;
      for (const auto& k : keys) row.push_back(o.contains(k) ? csv_scalar(o[k]) : "");
      csv_row(os, row);
    }
  } else if (j.is_array()) {
    csv_row(os, {"value"});
    for (const auto& v : j) csv_row(os, {csv_scalar(v)});
  } else if (j.is_object()) {
    csv_row(os, {"key", "value"});
    for (const auto& [k, v] : j.items()) csv_row(os, {k, csv_scalar(v)});
  } else {
    csv_row(os, {csv_scalar(j)});
  }
  return os.str();
}

}  // namespace fockkit
