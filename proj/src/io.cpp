// Copyright 2026 The ruledarr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ruledarr/io.hpp"

#include <set>
#include <string>
#include <vector>

#include "ruledarr/error.hpp"

namespace ruledarr::io {

namespace {

void reject_unknown(const json& obj, const std::set<std::string>& allowed,
                    const std::string& where) {
  if (!obj.is_object()) fail(ErrorCode::ParseError, where + " must be a JSON object");
  for (const auto& item : obj.items()) {
    if (!allowed.count(item.key())) {
      fail(ErrorCode::ParseError, "unknown key '" + item.key() + "' in " + where);
    }
  }
}

const json& field(const json& obj, const std::string& key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(ErrorCode::ParseError, "missing key '" + key + "' in " + where);
  return *it;
}

Integer as_integer(const json& v, const std::string& what) {
  if (v.is_number_unsigned()) return Integer(std::to_string(v.get<std::uint64_t>()));
  if (v.is_number_integer()) return Integer(std::to_string(v.get<std::int64_t>()));
  fail(ErrorCode::ParseError, what + " must be a JSON integer");
}

std::int64_t as_int64(const json& v, const std::string& what) {
  if (v.is_number_integer() && !v.is_number_unsigned()) return v.get<std::int64_t>();
  if (v.is_number_unsigned() && v.get<std::uint64_t>() <= INT64_MAX) {
    return static_cast<std::int64_t>(v.get<std::uint64_t>());
  }
  fail(ErrorCode::ParseError, what + " must be a JSON integer in 64-bit range");
}

bool as_bool(const json& v, const std::string& what) {
  if (!v.is_boolean()) fail(ErrorCode::ParseError, what + " must be a boolean");
  return v.get<bool>();
}

json plain_integer(const Integer& v) {
  if (mpz_fits_slong_p(v.get_mpz_t())) return json(static_cast<std::int64_t>(v.get_si()));
  fail(ErrorCode::ParameterRange, "value exceeds the JSON integer range: " + v.get_str());
}

Multiplicities parse_t(const json& j) {
  if (!j.is_object()) fail(ErrorCode::ParseError, "t must be an object");
  Multiplicities t;
  for (const auto& item : j.items()) {
    const std::string& key = item.key();
    std::size_t used = 0;
    std::int64_t k = 0;
    try {
      k = std::stoll(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || key.empty()) {
      fail(ErrorCode::ParseError, "t key '" + key + "' is not an integer");
    }
    t[k] = as_integer(item.value(), "t[" + key + "]");
  }
  return t;
}

json t_plain(const Multiplicities& t) {
  json out = json::object();
  for (const auto& [k, n] : t) out[std::to_string(k)] = plain_integer(n);
  return out;
}

IntRange parse_range(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2) {
    fail(ErrorCode::ParseError, what + " must be a [lo, hi] pair");
  }
  return {as_int64(j[0], what + "[0]"), as_int64(j[1], what + "[1]")};
}

}  // namespace

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& err) {
    fail(ErrorCode::ParseError, std::string("malformed JSON: ") + err.what());
  }
}

ArrangementProfile profile_from_json(const json& j) {
  reject_unknown(j, {"surface", "class", "d", "t", "c0_disjoint", "a1_four_curve_flag"},
                 "profile");
  const json& surface = field(j, "surface", "profile");
  reject_unknown(surface, {"g", "e"}, "surface");
  const json& cls = field(j, "class", "profile");
  reject_unknown(cls, {"a", "b"}, "class");
  bool c0 = false, flag = false;
  if (j.contains("c0_disjoint")) c0 = as_bool(j["c0_disjoint"], "c0_disjoint");
  if (j.contains("a1_four_curve_flag")) {
    flag = as_bool(j["a1_four_curve_flag"], "a1_four_curve_flag");
  }
  try {
    return ArrangementProfile(
        RuledSurface(as_integer(field(surface, "g", "surface"), "g"),
                     as_integer(field(surface, "e", "surface"), "e")),
        NumClass{as_integer(field(cls, "a", "class"), "a"),
                 as_integer(field(cls, "b", "class"), "b")},
        as_int64(field(j, "d", "profile"), "d"), parse_t(field(j, "t", "profile")), c0, flag);
  } catch (const Error& err) {
    if (err.code() == ErrorCode::InvalidArgument) fail(ErrorCode::ParseError, err.what());
    throw;
  }
}

json profile_to_json(const ArrangementProfile& p) {
  return {{"surface", {{"g", plain_integer(p.surface.genus)}, {"e", plain_integer(p.surface.e)}}},
          {"class", {{"a", plain_integer(p.cls.a)}, {"b", plain_integer(p.cls.b)}}},
          {"d", p.d},
          {"t", t_plain(p.t)},
          {"c0_disjoint", p.c0_disjoint},
          {"a1_four_curve_flag", p.a1_four_curve_flag}};
}

std::pair<RuledSurface, NumClass> embedding_from_json(const json& j) {
  reject_unknown(j, {"surface", "class"}, "embedding");
  const json& surface = field(j, "surface", "embedding");
  reject_unknown(surface, {"g", "e"}, "surface");
  const json& cls = field(j, "class", "embedding");
  reject_unknown(cls, {"a", "b"}, "class");
  try {
    return {RuledSurface(as_integer(field(surface, "g", "surface"), "g"),
                         as_integer(field(surface, "e", "surface"), "e")),
            NumClass{as_integer(field(cls, "a", "class"), "a"),
                     as_integer(field(cls, "b", "class"), "b")}};
  } catch (const Error& err) {
    if (err.code() == ErrorCode::InvalidArgument) fail(ErrorCode::ParseError, err.what());
    throw;
  }
}

IncidenceStructure incidence_from_json(const json& j) {
  reject_unknown(j, {"d", "points"}, "incidence");
  const std::int64_t d = as_int64(field(j, "d", "incidence"), "d");
  const json& pts = field(j, "points", "incidence");
  if (!pts.is_array()) fail(ErrorCode::ParseError, "points must be an array");
  std::vector<IncidenceStructure::CurveSet> points;
  points.reserve(pts.size());
  for (const json& pt : pts) {
    if (!pt.is_array()) fail(ErrorCode::ParseError, "each point must be an array");
    IncidenceStructure::CurveSet curves;
    for (const json& c : pt) curves.push_back(as_int64(c, "curve index"));
    points.push_back(std::move(curves));
  }
  try {
    return IncidenceStructure(d, std::move(points));
  } catch (const Error& err) {
    fail(ErrorCode::ParseError, err.what());
  }
}

json incidence_to_json(const IncidenceStructure& inc) {
  return {{"d", inc.d()}, {"points", inc.points()}};
}

LineArrangement lines_from_json(const json& j) {
  reject_unknown(j, {"name", "d", "t"}, "line arrangement");
  std::string name = "custom";
  if (j.contains("name")) {
    if (!j["name"].is_string()) fail(ErrorCode::ParseError, "name must be a string");
    name = j["name"].get<std::string>();
  }
  try {
    return LineArrangement(name, as_int64(field(j, "d", "line arrangement"), "d"),
                           parse_t(field(j, "t", "line arrangement")));
  } catch (const Error& err) {
    if (err.code() == ErrorCode::InvalidArgument) fail(ErrorCode::ParseError, err.what());
    throw;
  }
}

json lines_to_json(const LineArrangement& L) {
  return {{"name", L.name}, {"d", L.d}, {"t", t_plain(L.t)}};
}

ScanGrid grid_from_json(const json& j) {
  reject_unknown(j, {"g", "e", "a", "b_offset", "d"}, "scan grid");
  ScanGrid grid;
  if (j.contains("g")) grid.g = parse_range(j["g"], "g");
  if (j.contains("e")) grid.e = parse_range(j["e"], "e");
  if (j.contains("a")) grid.a = parse_range(j["a"], "a");
  if (j.contains("b_offset")) grid.b_offset = parse_range(j["b_offset"], "b_offset");
  if (j.contains("d")) grid.d = parse_range(j["d"], "d");
  return grid;
}

json grid_to_json(const ScanGrid& grid) {
  auto range = [](const IntRange& r) { return json::array({r.lo, r.hi}); };
  return {{"g", range(grid.g)},
          {"e", range(grid.e)},
          {"a", range(grid.a)},
          {"b_offset", range(grid.b_offset)},
          {"d", range(grid.d)}};
}

json rational_json(const Rational& q) {
  return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

json integer_json(const Integer& v) { return v.get_str(); }

json multiplicities_json(const Multiplicities& t) {
  json out = json::object();
  for (const auto& [k, n] : t) out[std::to_string(k)] = n.get_str();
  return out;
}

}  // namespace ruledarr::io
