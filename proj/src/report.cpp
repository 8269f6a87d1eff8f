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

#include "ruledarr/report.hpp"

#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <utility>

#include "ruledarr/bounds.hpp"
#include "ruledarr/covering.hpp"
#include "ruledarr/error.hpp"

namespace ruledarr::report {

namespace {

using io::integer_json;
using io::rational_json;

json checks_json(const ValidationReport& vr) {
  json checks = json::array();
  for (const Check& c : vr.checks) {
    checks.push_back({{"name", c.name},
                      {"status", std::string(to_string(c.status))},
                      {"detail", c.detail}});
  }
  return {{"passed", vr.passed()}, {"checks", checks}};
}

json stats_json(const ProfileStats& st) {
  return {{"h", integer_json(st.h)},
          {"f0", integer_json(st.f0)},
          {"f1", integer_json(st.f1)},
          {"f2", integer_json(st.f2)},
          {"sum_rp_sq", integer_json(st.sum_rp_sq)}};
}

json error_json(const Error& err) {
  return {{"code", std::string(to_string(err.code()))}, {"message", err.what()}};
}

// Runs a profile-consuming command. Shared header: input profile, stats and
// both assumption reports. Library errors from an input outside the
// assumptions become an "error" entry and ok = false.
Report profile_command(const std::string& name, const ArrangementProfile& p,
                       const std::function<void(json&)>& fill) {
  Report r{name, json::object(), true};
  r.body["command"] = name;
  r.body["profile"] = io::profile_to_json(p);
  r.body["stats"] = stats_json(stats(p));
  const ValidationReport star = validate_star(p);
  r.body["standing_assumptions"] = checks_json(star);
  r.body["extra_assumption"] = checks_json(validate_extra(p));
  if (!star.passed()) {
    r.ok = false;
    r.body["error"] = {{"code", "ValidationFailed"},
                       {"message", "profile violates the standing assumptions"}};
    return r;
  }
  try {
    fill(r.body);
  } catch (const Error& err) {
    if (err.code() == ErrorCode::Internal) throw;
    r.ok = false;
    r.body["error"] = error_json(err);
  }
  return r;
}

json point_json(const ScanPoint& pt) {
  return {{"g", std::to_string(pt.g)},
          {"e", std::to_string(pt.e)},
          {"a", std::to_string(pt.a)},
          {"b", std::to_string(pt.b)},
          {"d", std::to_string(pt.d)}};
}

bool is_rational(const json& j) {
  return j.is_object() && j.size() == 2 && j.contains("num") && j.contains("den") &&
         j["num"].is_string() && j["den"].is_string();
}

Rational rational_from(const json& j) {
  return make_rational(parse_integer(j["num"].get<std::string>()),
                       parse_integer(j["den"].get<std::string>()));
}

std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "null";
  return j.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void flatten(const json& j, const std::string& path, std::ostringstream& out) {
  if (is_rational(j)) {
    out << csv_escape(path) << ','
        << csv_escape(j["num"].get<std::string>() + "/" + j["den"].get<std::string>()) << '\n';
  } else if (j.is_object()) {
    for (const auto& item : j.items()) {
      flatten(item.value(), path.empty() ? item.key() : path + "." + item.key(), out);
    }
  } else if (j.is_array()) {
    if (j.empty()) out << csv_escape(path) << ",\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      flatten(j[i], path + "." + std::to_string(i), out);
    }
  } else {
    out << csv_escape(path) << ',' << csv_escape(scalar_text(j)) << '\n';
  }
}

void pretty(const json& j, int indent, int places, std::ostringstream& out) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  auto inline_value = [&](const json& v) -> std::optional<std::string> {
    if (is_rational(v)) {
      const Rational q = rational_from(v);
      std::string text = to_decimal(q, places);
      if (!is_integer(q)) text += "  (" + q.get_str() + ")";
      return text;
    }
    if (v.is_object() || (v.is_array() && !v.empty())) {
      if (v.is_array()) {
        bool scalars = true;
        for (const json& x : v) scalars = scalars && !x.is_object() && !x.is_array();
        if (scalars) {
          std::string text = "[";
          for (std::size_t i = 0; i < v.size(); ++i) {
            text += (i ? ", " : "") + scalar_text(v[i]);
          }
          return text + "]";
        }
      }
      return std::nullopt;
    }
    if (v.is_array()) return std::string("[]");
    return scalar_text(v);
  };

  if (j.is_object()) {
    for (const auto& item : j.items()) {
      if (auto text = inline_value(item.value())) {
        out << pad << item.key() << ": " << *text << '\n';
      } else {
        out << pad << item.key() << ":\n";
        pretty(item.value(), indent + 1, places, out);
      }
    }
  } else if (j.is_array()) {
    for (const json& v : j) {
      if (auto text = inline_value(v)) {
        out << pad << "- " << *text << '\n';
      } else {
        out << pad << "-\n";
        pretty(v, indent + 1, places, out);
      }
    }
  }
}

}  // namespace

Report validate(const ArrangementProfile& p) {
  Report r = profile_command("validate", p, [](json&) {});
  if (r.body.contains("error")) r.body.erase("error");
  return r;
}

Report hconst(const ArrangementProfile& p) {
  return profile_command("hconst", p, [&](json& body) {
    const ProfileStats st = stats(p);
    require(st.f0 > 0, ErrorCode::EmptySingularLocus, "profile has no singular points");
    body["harbourne"] = rational_json(harbourne_constant(p));
    body["harbourne_via_f1"] = rational_json(make_rational(st.h * p.d - st.f1, st.f0));
  });
}

Report cover(const ArrangementProfile& p) {
  return profile_command("cover", p, [&](json& body) {
    const CoverInvariants inv = cover_invariants(p);
    const PositivityHint hint = canonical_positivity_hint(p);
    json exceptional = json::array();
    for (const auto& [k, n] : p.t) {
      if (k < 3 || n == 0) continue;
      const ExceptionalCurveInvariants fp = fp_invariants(k);
      exceptional.push_back({{"r_p", std::to_string(k)},
                             {"self_intersection", integer_json(fp.self_intersection)},
                             {"euler_characteristic", integer_json(fp.euler_characteristic)},
                             {"genus", rational_json(fp.genus)}});
    }
    body["cover"] = {
        {"scale_exponent", std::to_string(inv.scale_exponent)},
        {"euler_norm", rational_json(inv.euler_norm)},
        {"c1sq_norm", rational_json(inv.c1sq_norm)},
        {"chern_difference_norm", rational_json(inv.chern_difference_norm)},
        {"euler_absolute", rational_json(inv.absolute_euler())},
        {"c1sq_absolute", rational_json(inv.absolute_c1sq())},
        {"minus_two_curve_count", integer_json(inv.minus_two_curve_count)},
        {"elliptic_minus_four_count", integer_json(inv.elliptic_minus_four_count)},
        {"hirzebruch_polynomial", rational_json(inv.chern_difference_norm)},
        {"hirzebruch_polynomial_nonnegative", sgn(inv.chern_difference_norm) >= 0},
        {"canonical_positivity",
         {{"c1sq_norm", rational_json(hint.c1sq_norm)},
          {"general_type_guaranteed", hint.general_type_guaranteed}}},
        {"exceptional_curves", exceptional}};
  });
}

Report bounds(const ArrangementProfile& p) {
  return profile_command("bounds", p, [&](json& body) {
    const BoundReport br = bound_report(p);
    json sat = json::object();
    for (const auto& [name, ok] : br.satisfied) sat[name] = ok;
    json out = {{"harbourne", rational_json(br.harbourne)},
                {"general_rhs", rational_json(br.general_rhs)},
                {"hirzebruch_lhs", rational_json(br.hirzebruch_lhs)},
                {"hirzebruch_rhs", rational_json(br.hirzebruch_rhs)},
                {"dtilde_sq", rational_json(br.dtilde_sq)},
                {"dtilde_sq_lower", rational_json(br.dtilde_sq_lower)},
                {"extra_assumption", std::string(to_string(br.extra_assumption))},
                {"boundary_b_eq_ae", br.boundary_b_eq_ae},
                {"satisfied", sat}};
    out["c0_disjoint_rhs"] = br.c0_disjoint_rhs ? rational_json(*br.c0_disjoint_rhs) : json();
    out["global_rhs"] = br.global_rhs ? rational_json(*br.global_rhs) : json();
    if (br.c0_disjoint_rhs) {
      const C0DisjointBound c0 = c0_disjoint_bound(p);
      out["c0_inequality"] = {{"lhs", rational_json(c0.lhs)},
                              {"rhs", rational_json(c0.c0_rhs)},
                              {"relaxed_rhs", rational_json(c0.relaxed_rhs)}};
    }
    json exceptional = json::object();
    for (const auto& [k, n] : p.t) {
      if (k >= 3 && n != 0) {
        exceptional[std::to_string(k)] = rational_json(t_dot_exceptional(k));
      }
    }
    out["t_dot_exceptional"] = exceptional;
    body["bounds"] = out;
  });
}

Report pullback(const LineArrangement& L, const Integer& e) {
  Report r{"pullback", json::object(), true};
  r.body["command"] = "pullback";
  r.body["arrangement"] = io::lines_to_json(L);
  r.body["e"] = integer_json(e);
  r.body["plane_harbourne"] = rational_json(plane_harbourne_constant(L));
  const ArrangementProfile p = ruledarr::pullback(L, e);
  r.body["profile"] = io::profile_to_json(p);
  const ValidationReport star = validate_star(p);
  r.body["standing_assumptions"] = checks_json(star);
  if (!star.passed()) {
    r.ok = false;
    return r;
  }
  r.body["harbourne"] = rational_json(harbourne_constant(p));
  r.body["c0_disjoint_rhs"] = rational_json(c0_disjoint_bound(p).bound);
  return r;
}

Report gallery(const Integer& e) {
  Report r{"gallery", json::object(), true};
  r.body["command"] = "gallery";
  r.body["e"] = integer_json(e);
  json items = json::array();
  for (const LineArrangement& L : ruledarr::gallery()) {
    items.push_back({{"arrangement", io::lines_to_json(L)},
                     {"plane_harbourne", rational_json(plane_harbourne_constant(L))},
                     {"profile", io::profile_to_json(ruledarr::pullback(L, e))}});
  }
  r.body["arrangements"] = items;
  return r;
}

Report incidence_check(const IncidenceStructure& inc, std::optional<Integer> expected_h,
                       const std::optional<SurfaceAndClass>& embedding) {
  Report r{"incidence-check", json::object(), true};
  json& body = r.body;
  body["command"] = "incidence-check";
  body["d"] = std::to_string(inc.d());
  body["point_count"] = std::to_string(inc.point_count());

  const auto gram = gram_matrix(inc);
  if (!expected_h) {
    expected_h = inc.d() >= 2 ? Integer(gram[0][1]) : Integer(0);
  }
  if (embedding) {
    const Integer h = pairwise_intersection(embedding->surface, embedding->cls);
    if (h != *expected_h) {
      body["embedding_mismatch"] = "class pairing " + h.get_str() +
                                   " differs from expected_h " + expected_h->get_str();
      r.ok = false;
    }
  }
  body["expected_h"] = integer_json(*expected_h);

  const ValidationReport audited = audit(inc, *expected_h);
  body["audit"] = checks_json(audited);
  if (!audited.passed()) r.ok = false;

  body["multiplicities"] = io::multiplicities_json(multiplicities(inc));
  body["rank"] = std::to_string(incidence_rank(inc));
  body["four_curve"] = inc.d() >= 4 ? json(check_four_curve(inc)) : json();

  bool off_diagonal = true, diagonal = true;
  for (std::size_t i = 0; i < gram.size(); ++i) {
    for (std::size_t j = 0; j < gram.size(); ++j) {
      if (i == j) {
        diagonal = diagonal && gram[i][i] > *expected_h;
      } else {
        off_diagonal = off_diagonal && gram[i][j] == *expected_h;
      }
    }
  }
  body["gram"] = {{"off_diagonal_equals_h", off_diagonal}, {"diagonal_exceeds_h", diagonal}};

  json curves = json::array();
  for (const CurveStats& cs : all_curve_stats(inc)) {
    curves.push_back({{"curve", std::to_string(cs.curve_index)},
                      {"f0", integer_json(cs.f0_j)},
                      {"t", io::multiplicities_json(cs.t_k_j)}});
  }
  body["curve_stats"] = curves;

  if (embedding && r.ok) {
    const ArrangementProfile p = profile_of(inc, embedding->surface, embedding->cls);
    body["profile"] = io::profile_to_json(p);
    body["standing_assumptions"] = checks_json(validate_star(p));
  }
  return r;
}

Report bq_scan(const ScanGrid& grid, unsigned workers) {
  Report r{"bq-scan", json::object(), true};
  const ScanReport sr = scan(grid, workers);
  json witnesses = json::array();
  for (const ScanPoint& pt : sr.witnesses) witnesses.push_back(point_json(pt));
  json samples = json::array();
  for (const ScanPoint& pt : sr.disagreement_samples) samples.push_back(point_json(pt));
  json tallies = json::object();
  for (const auto& [name, n] : sr.tallies) tallies[name] = std::to_string(n);
  r.body = {{"command", "bq-scan"},
            {"grid", io::grid_to_json(grid)},
            {"total", std::to_string(sr.total)},
            {"infeasible", std::to_string(sr.infeasible)},
            {"feasible_count", std::to_string(sr.feasible_count)},
            {"witnesses", witnesses},
            {"tallies", tallies},
            {"shortcut_disagreements", std::to_string(sr.shortcut_disagreements)},
            {"shortcut_uncovered", std::to_string(sr.shortcut_uncovered)},
            {"disagreement_samples", samples},
            {"no_ball_quotient", sr.feasible_count == 0}};
  return r;
}

std::string render(const Report& r, Format format, int places) {
  std::ostringstream out;
  switch (format) {
    case Format::Json:
      out << r.body.dump(2) << '\n';
      break;
    case Format::Csv:
      out << "field,value\n";
      flatten(r.body, "", out);
      break;
    case Format::Pretty:
      pretty(r.body, 0, places, out);
      break;
  }
  return out.str();
}

}  // namespace ruledarr::report
