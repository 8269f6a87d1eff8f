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

#include <iostream>

#include "doctest.h"
#include "ruledarr/error.hpp"
#include "ruledarr/incidence.hpp"
#include "support.hpp"

using namespace ruledarr;

namespace {

bool audit_ok(const IncidenceStructure& inc, std::int64_t h) {
  return audit(inc, h).passed();
}

}  // namespace

TEST_CASE("Klein oracle combinatorics") {
  const oracle::Points pts = oracle::klein_plane_points();
  REQUIRE(pts.size() == 49);
  const auto t = oracle::counts(pts);
  CHECK(t.at(3) == 28);
  CHECK(t.at(4) == 21);
  for (std::int64_t i = 1; i <= 21; ++i)
    for (std::int64_t j = i + 1; j <= 21; ++j) CHECK(oracle::cooccurrence(pts, i, j) == 1);
}

TEST_CASE("audit of small structures") {
  const IncidenceStructure generic(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  const ValidationReport r = audit(generic, 1);
  CHECK(r.passed());
  for (const CurveStats& cs : all_curve_stats(generic)) CHECK(cs.f0_j == 3);

  const IncidenceStructure missing(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
  const ValidationReport rm = audit(missing, 1);
  CHECK(rm.status_of(audit_names::kPairCooccurrence) == CheckStatus::Fail);
  CHECK(rm.find(audit_names::kPairCooccurrence)->detail.find("curves 3,4") != std::string::npos);

  const IncidenceStructure triple(4, {{1, 2, 3}, {1, 4}, {2, 4}, {3, 4}});
  CHECK(audit_ok(triple, 1));
  const Multiplicities t = multiplicities(triple);
  CHECK(t.at(3) == 1);
  CHECK(t.at(2) == 3);
}

TEST_CASE("profile_of") {
  const IncidenceStructure triple(4, {{1, 2, 3}, {1, 4}, {2, 4}, {3, 4}});
  try {
    profile_of(triple, RuledSurface(0, 4), {1, 4});
    FAIL("expected AuditFailed");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::AuditFailed);
  }
  const ArrangementProfile p = profile_of(realize_generic(4, 4), RuledSurface(0, 4), {1, 4});
  CHECK(p.t_at(2) == 24);
  CHECK_FALSE(p.c0_disjoint);
  CHECK(p.a1_four_curve_flag);

  const IncidenceStructure klein(21, oracle::replicate(oracle::klein_plane_points(), 4));
  const ArrangementProfile pk = profile_of(klein, RuledSurface(0, 4), {1, 4});
  CHECK(pk.t_at(3) == 112);
  CHECK(pk.t_at(4) == 84);
  CHECK(pk.a1_four_curve_flag);
  CHECK(validate_star(pk).passed());
}

TEST_CASE("double counting on random structures") {
  auto gen = oracle::rng(10);
  for (int i = 0; i < 100; ++i) {
    const oracle::Points pts = oracle::random_structure(gen, 4 + i % 8, 1 + i % 5, 10);
    const IncidenceStructure inc(4 + i % 8, pts);
    Integer incidences = 0, weighted = 0;
    for (const auto& p : pts) incidences += Integer(static_cast<long>(p.size()));
    for (const auto& [k, n] : multiplicities(inc)) weighted += k * n;
    CHECK(weighted == incidences);
    CHECK(multiplicities(inc) == oracle::counts(pts));
    CHECK(audit_ok(inc, 1 + i % 5));
  }
}

TEST_CASE("realize_generic") {
  CHECK(realize_generic(4, 4).point_count() == 24);
  CHECK(realize_generic(21, 4).point_count() == 840);
  for (std::int64_t d = 2; d <= 9; ++d)
    for (std::int64_t h = 1; h <= 4; ++h) CHECK(audit_ok(realize_generic(d, h), h));
  const auto pts = realize_generic(4, 2).points();
  CHECK(pts.front() == IncidenceStructure::CurveSet{1, 2});
  CHECK(pts.back() == IncidenceStructure::CurveSet{3, 4});
}

TEST_CASE("four-curve condition") {
  CHECK(check_four_curve(IncidenceStructure(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}})));
  CHECK_FALSE(check_four_curve(IncidenceStructure(4, {{1, 2, 3, 4}, {1, 2, 3, 4}})));
  CHECK(check_four_curve(IncidenceStructure(21, oracle::klein_plane_points())));
  // Oracle: brute force over 4-subsets.
  auto gen = oracle::rng(11);
  for (int i = 0; i < 60; ++i) {
    const std::int64_t d = 4 + i % 4;
    const oracle::Points pts = oracle::random_structure(gen, d, 1 + i % 2, 12);
    bool expected = false;
    for (std::int64_t a = 1; a <= d && !expected; ++a)
      for (std::int64_t b = a + 1; b <= d && !expected; ++b)
        for (std::int64_t c = b + 1; c <= d && !expected; ++c)
          for (std::int64_t e = c + 1; e <= d && !expected; ++e) {
            bool common = false;
            for (const auto& p : pts) {
              int hits = 0;
              for (std::int64_t x : p) hits += x == a || x == b || x == c || x == e;
              common = common || hits == 4;
            }
            expected = !common;
          }
    CHECK(check_four_curve(IncidenceStructure(d, pts)) == expected);
  }
}

TEST_CASE("incidence rank") {
  CHECK(incidence_rank(realize_generic(4, 4)) == 4);
  CHECK(incidence_rank(IncidenceStructure(4, {{1, 2, 3, 4}})) == 1);
  CHECK(incidence_rank(IncidenceStructure(3, {{1, 2}})) == 1);
  CHECK(incidence_rank(IncidenceStructure(3, {{1, 2}, {2, 3}})) == 2);
  auto gen = oracle::rng(12);
  for (int i = 0; i < 150; ++i) {
    const std::int64_t d = 2 + i % 9;
    oracle::Points pts;
    std::uniform_int_distribution<std::int64_t> curve(1, d);
    const int n = 1 + i % 7;
    for (int k = 0; k < n; ++k) {
      std::vector<std::int64_t> p{curve(gen), curve(gen), curve(gen)};
      std::sort(p.begin(), p.end());
      p.erase(std::unique(p.begin(), p.end()), p.end());
      if (p.size() >= 2) pts.push_back(p);
    }
    if (pts.empty()) continue;
    CHECK(incidence_rank(IncidenceStructure(d, pts)) == oracle::rank_q(d, pts));
  }
}

TEST_CASE("gram matrix") {
  const auto g = gram_matrix(IncidenceStructure(4, {{1, 2, 3}, {1, 4}, {2, 4}, {3, 4}}));
  CHECK(g[0][0] == 2);
  CHECK(g[3][3] == 3);
  CHECK(g[0][1] == 1);
  CHECK(g[1][0] == 1);
}

TEST_CASE("curve stats") {
  const IncidenceStructure klein(21, oracle::replicate(oracle::klein_plane_points(), 4));
  for (const CurveStats& cs : all_curve_stats(klein)) {
    CHECK(cs.t_k_j.at(3) == 16);
    CHECK(cs.t_k_j.at(4) == 16);
    CHECK(cs.f0_j == 32);
    CHECK(cs.t2_j == 0);
    CHECK(cs.t6_j == 0);
  }
  CHECK_THROWS_AS(curve_stats(klein, 22), Error);
}

TEST_CASE("malformed structures are rejected") {
  CHECK_THROWS_AS(IncidenceStructure(3, {{1}}), Error);
  CHECK_THROWS_AS(IncidenceStructure(3, {{1, 1}}), Error);
  CHECK_THROWS_AS(IncidenceStructure(3, {{1, 4}}), Error);
  CHECK_THROWS_AS(IncidenceStructure(3, {{0, 2}}), Error);
}
