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
#include <vector>

#include "ruledarr/arrangement.hpp"
#include "ruledarr/checks.hpp"

namespace ruledarr {

/// A purely combinatorial point/curve incidence. Curves are 1..d; every
/// point records the sorted set of curves through it (at least two).
/// Points are anonymous and two points may carry the same curve set.
class IncidenceStructure {
 public:
  using CurveSet = std::vector<std::int64_t>;

  /// Sorts each point's curve list. Throws InvalidArgument on out-of-range
  /// or repeated indices, or a point on fewer than two curves.
  IncidenceStructure(std::int64_t d, std::vector<CurveSet> points);

  std::int64_t d() const noexcept { return d_; }
  const std::vector<CurveSet>& points() const noexcept { return points_; }
  std::size_t point_count() const noexcept { return points_.size(); }

  friend bool operator==(const IncidenceStructure&, const IncidenceStructure&) = default;

 private:
  std::int64_t d_;
  std::vector<CurveSet> points_;
};

struct CurveStats {
  std::int64_t curve_index = 0;
  Multiplicities t_k_j;  // k -> number of k-fold points on this curve
  Integer f0_j;
  Integer t2_j;
  Integer t6_j;
};

CurveStats curve_stats(const IncidenceStructure& inc, std::int64_t curve);
std::vector<CurveStats> all_curve_stats(const IncidenceStructure& inc);

/// Check names emitted by audit.
namespace audit_names {
inline constexpr const char* kPairCooccurrence = "pair_cooccurrence";
inline constexpr const char* kPerCurveIncidence = "per_curve_incidence";
inline constexpr const char* kDoubleCounting = "double_counting";
}  // namespace audit_names

/// Audits the structure against a constant pairwise intersection number:
/// every pair of curves shares exactly `expected_h` points, each curve has
/// sum over its points of (r_p - 1) equal to expected_h (d - 1), and the
/// per-curve counts add up to k * t_k. Each failed check's detail names the
/// first counterexample.
ValidationReport audit(const IncidenceStructure& inc, const Integer& expected_h);

/// Global multiplicity counts t_k of the structure, no audit performed.
Multiplicities multiplicities(const IncidenceStructure& inc);

/// The arrangement profile realized by `inc` in class `cls`. Throws
/// AuditFailed unless the audit passes with h = 2ab - a^2 e. The four-curve
/// flag is set iff check_four_curve holds; c0_disjoint is always false.
ArrangementProfile profile_of(const IncidenceStructure& inc, const RuledSurface& s,
                              const NumClass& cls);

/// For each pair i < j, `h` points on exactly {i, j}, ordered by (i, j, copy).
IncidenceStructure realize_generic(std::int64_t d, std::int64_t h);

/// True iff some four curves have no point common to all four. Needs d >= 4.
bool check_four_curve(const IncidenceStructure& inc);

/// Exact rank over Q of the d x f0 0/1 incidence matrix (rows are curves).
std::size_t incidence_rank(const IncidenceStructure& inc);

/// Gram matrix of the incidence rows: entry (i, j) counts points on both
/// curves i + 1 and j + 1.
std::vector<std::vector<std::int64_t>> gram_matrix(const IncidenceStructure& inc);

}  // namespace ruledarr
