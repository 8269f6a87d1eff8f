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

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ruledarr/arrangement.hpp"
#include "ruledarr/incidence.hpp"
#include "ruledarr/numeric.hpp"

namespace ruledarr {

/// Relative proportionality 2F^2 - e(F) of a component over an r_p-fold
/// point: 2^{r_p - 2}(r_p - 6).
Integer prop_exceptional(std::int64_t r_p);

/// prop(D_j) / 2^{d-3} = 4a' + 2b' - t6^j + t2^j for an arrangement with
/// only double and sixfold points. Throws MultiplicityProfileNotBinary26 if
/// the profile has any other multiplicity.
Rational prop_strict_transform(const ArrangementProfile& p, const CurveStats& cs);

/// Violation names reported by feasibility.
namespace violation {
inline constexpr const char* kIntegrality = "Integrality";
inline constexpr const char* kNonnegativity = "Nonnegativity";
inline constexpr const char* kHC2Nonzero = "HC2Nonzero";
inline constexpr const char* kReducedEquation = "ReducedEquation";
inline constexpr const char* kPositivityArgument = "PositivityArgument";
inline constexpr const char* kSmallDCheck = "SmallDCheck";
}  // namespace violation

struct BallQuotientVerdict {
  Integer a_prime;  // 2ab - a^2 e
  Integer b_prime;  // 2ae + a(2g - 2 - e) - 2b
  Rational t2_required;
  Rational t6_required;
  bool integrality_ok = false;
  bool nonnegativity_ok = false;
  Rational hc2_value;
  // -16 = d[(3a - 1)(2b - ae) - 2a] + (2ad - 16)g
  Integer reduced_lhs{-16};
  Rational reduced_rhs;
  // Shortcut arguments: whether each applies and whether it rules the point out.
  bool positivity_applies = false;
  bool positivity_rules_out = false;
  bool small_d_applies = false;
  bool small_d_rules_out = false;
  bool small_d_chain_ok = false;
  Rational small_d_value;  // 16 - 4d + 4(3d - d(d-1)/10)
  bool feasible = false;
  std::vector<std::string> violated;
};

/// Solves the two per-curve proportionality equations for the double and
/// sixfold counts:
///   t2 = (a'd^2 - 21a'd - 10b'd)/12,  t6 = (a'd^2 + 3a'd + 2b'd)/36.
/// Fills only the a'/b'/t2/t6/integrality/nonnegativity fields.
BallQuotientVerdict solve_t2_t6(const RuledSurface& s, const Integer& a, const Integer& b,
                                std::int64_t d);

/// Full ball-quotient feasibility of the forced (t2, t6) profile, plus the
/// two shortcut arguments. Every condition is evaluated; `violated` lists
/// all failures.
BallQuotientVerdict feasibility(const RuledSurface& s, const Integer& a, const Integer& b,
                                std::int64_t d);

struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = -1;  // inclusive; hi < lo is empty

  std::int64_t size() const { return hi < lo ? 0 : hi - lo + 1; }
};

/// b runs over a*e + b_offset.
struct ScanGrid {
  IntRange g{0, 5};
  IntRange e{4, 10};
  IntRange a{1, 5};
  IntRange b_offset{0, 10};
  IntRange d{4, 50};

  std::int64_t size() const;
};

struct ScanPoint {
  std::int64_t g, e, a, b, d;
};

struct ScanReport {
  std::int64_t total = 0;
  std::int64_t infeasible = 0;
  std::int64_t feasible_count = 0;
  std::vector<ScanPoint> witnesses;
  std::map<std::string, std::int64_t> tallies;
  // Points where a shortcut argument applies but disagrees with the direct
  // predicate, or where no shortcut covers an infeasible point.
  std::int64_t shortcut_disagreements = 0;
  std::int64_t shortcut_uncovered = 0;
  std::vector<ScanPoint> disagreement_samples;
};

/// Throws PreconditionViolated if the grid leaves e >= 4, a >= 1,
/// b_offset >= 0 or d >= 4. The report does not depend on `workers`.
ScanReport scan(const ScanGrid& grid, unsigned workers = 1);

}  // namespace ruledarr
