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

#include <algorithm>

#include "doctest.h"
#include "ruledarr/ballquotient.hpp"
#include "ruledarr/covering.hpp"
#include "ruledarr/error.hpp"
#include "ruledarr/pullback.hpp"
#include "support.hpp"

using namespace ruledarr;

namespace {

bool has(const BallQuotientVerdict& v, const char* name) {
  return std::find(v.violated.begin(), v.violated.end(), name) != v.violated.end();
}

// Brute-force substitution: t2 and t6 from the two per-curve equations
//   a'(d-1) = t2^j + 5 t6^j,  4a' + 2b' = t6^j - t2^j
// with t2 = d t2^j / 2, t6 = d t6^j / 6.
std::pair<Rational, Rational> solve_oracle(long g, long e, long a, long b, long d) {
  const Rational ap(2 * a * b - a * a * e), bp(2 * a * e + a * (2 * g - 2 - e) - 2 * b);
  const Rational t6j = (ap * (d - 1) + 4 * ap + 2 * bp) / 6;
  const Rational t2j = ap * (d - 1) - 5 * t6j;
  return {d * t2j / 2, d * t6j / 6};
}

}  // namespace

TEST_CASE("relative proportionality of exceptional components") {
  CHECK(prop_exceptional(6) == 0);
  CHECK(prop_exceptional(3) == -6);
  CHECK(prop_exceptional(7) == 32);
  for (int r = 3; r <= 12; ++r) {
    const auto fp = fp_invariants(r);
    CHECK(prop_exceptional(r) == 2 * fp.self_intersection - fp.euler_characteristic);
  }
}

TEST_CASE("prop of a strict transform") {
  const ArrangementProfile p(RuledSurface(0, 4), {1, 4}, 21, {{2, 105}, {6, 49}});
  CurveStats none;
  CHECK(prop_strict_transform(p, none) == 4 * 4 + 2 * -6);
  CurveStats cs;
  cs.t_k_j = {{2, 10}, {6, 14}};
  cs.t2_j = 10;
  cs.t6_j = 14;
  CHECK(prop_strict_transform(p, cs) == 16 - 12 - 14 + 10);
  const ArrangementProfile mixed(RuledSurface(0, 4), {1, 4}, 21, {{3, 112}, {4, 84}});
  try {
    prop_strict_transform(mixed, none);
    FAIL("expected MultiplicityProfileNotBinary26");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::MultiplicityProfileNotBinary26);
  }
}

TEST_CASE("solving for t2 and t6") {
  const BallQuotientVerdict v = solve_t2_t6(RuledSurface(0, 4), 1, 4, 21);
  CHECK(v.a_prime == 4);
  CHECK(v.b_prime == -6);
  CHECK(v.t2_required == 105);
  CHECK(v.t6_required == 49);
  CHECK(v.integrality_ok);
  CHECK(v.nonnegativity_ok);
  // Per curve: t6^j - t2^j = 4a' + 2b' = 4, and a'(d-1) = 5 t6^j + t2^j.
  const Rational t2j = 2 * v.t2_required / 21, t6j = 6 * v.t6_required / 21;
  CHECK(t6j - t2j == 4);
  CHECK(5 * t6j + t2j == 80);

  for (long g = 0; g <= 3; ++g)
    for (long e = 4; e <= 7; ++e)
      for (long a = 1; a <= 3; ++a)
        for (long b = a * e; b <= a * e + 4; ++b)
          for (long d = 4; d <= 30; ++d) {
            const auto [t2, t6] = solve_oracle(g, e, a, b, d);
            const BallQuotientVerdict s = solve_t2_t6(RuledSurface(g, e), a, b, d);
            CHECK(s.t2_required == t2);
            CHECK(s.t6_required == t6);
            CHECK(s.integrality_ok == (is_integer(t2) && is_integer(t6)));
          }
}

TEST_CASE("feasibility at the worked point") {
  const BallQuotientVerdict v = feasibility(RuledSurface(0, 4), 1, 4, 21);
  CHECK(v.hc2_value == 142);
  CHECK(v.reduced_rhs == 126);
  CHECK(v.reduced_lhs == -16);
  CHECK_FALSE(v.feasible);
  CHECK(has(v, violation::kHC2Nonzero));
  CHECK(has(v, violation::kReducedEquation));
  CHECK(v.positivity_applies);
  CHECK(v.positivity_rules_out);
}

TEST_CASE("shortcut arguments") {
  const BallQuotientVerdict a2 = feasibility(RuledSurface(1, 5), 2, 10, 6);
  CHECK(a2.positivity_applies);
  CHECK(a2.positivity_rules_out);
  CHECK(has(a2, violation::kPositivityArgument));

  const BallQuotientVerdict s5 = feasibility(RuledSurface(0, 4), 1, 4, 5);
  CHECK(s5.small_d_applies);
  CHECK(s5.small_d_value == 48);
  CHECK(s5.small_d_chain_ok);
  CHECK(s5.small_d_rules_out);
  CHECK(has(s5, violation::kSmallDCheck));
  for (long d = 4; d <= 7; ++d) {
    CHECK(feasibility(RuledSurface(0, 4), 1, 4, d).small_d_value ==
          16 - 4 * d + 4 * (3 * d - make_rational(d * (d - 1), 10)));
  }
}

TEST_CASE("H_C(2) at the forced profile against substitution") {
  for (long g = 0; g <= 2; ++g)
    for (long e = 4; e <= 6; ++e)
      for (long a = 1; a <= 3; ++a)
        for (long b = a * e; b <= a * e + 3; ++b)
          for (long d = 4; d <= 25; ++d) {
            const auto [t2, t6] = solve_oracle(g, e, a, b, d);
            const Rational expected =
                16 - 16 * g + d * ((2 * b - a * e) * (5 * a - 2) + 4 * a * (g - 1)) + t2 - 3 * t6;
            const BallQuotientVerdict v = feasibility(RuledSurface(g, e), a, b, d);
            CHECK(v.hc2_value == expected);
            CHECK(v.reduced_rhs + 16 == expected);
          }
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(feasibility(RuledSurface(0, 3), 1, 3, 5), Error);
  CHECK_THROWS_AS(feasibility(RuledSurface(0, 4), 1, 3, 5), Error);
  CHECK_THROWS_AS(feasibility(RuledSurface(0, 4), 0, 3, 5), Error);
}

TEST_CASE("scan") {
  const ScanReport empty = scan(ScanGrid{{0, -1}, {4, 10}, {1, 5}, {0, 10}, {4, 50}});
  CHECK(empty.total == 0);
  CHECK(empty.tallies.empty());

  const ScanReport one = scan(ScanGrid{{0, 0}, {4, 4}, {1, 1}, {0, 0}, {21, 21}});
  CHECK(one.total == 1);
  CHECK(one.infeasible == 1);
  CHECK(one.tallies.at(violation::kHC2Nonzero) == 1);
  CHECK(one.tallies.at(violation::kReducedEquation) == 1);

  const ScanGrid small{{0, 2}, {4, 6}, {1, 3}, {0, 4}, {4, 20}};
  const ScanReport s1 = scan(small, 1);
  CHECK(s1.total == small.size());
  CHECK(s1.feasible_count == 0);
  CHECK(s1.shortcut_disagreements == 0);
  for (unsigned w : {2u, 3u, 8u, 1000u}) {
    const ScanReport sw = scan(small, w);
    CHECK(sw.total == s1.total);
    CHECK(sw.tallies == s1.tallies);
    CHECK(sw.shortcut_uncovered == s1.shortcut_uncovered);
  }
  CHECK_THROWS_AS(scan(ScanGrid{{0, 0}, {3, 4}, {1, 1}, {0, 0}, {4, 4}}), Error);
}
