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

#include "ruledarr/checks.hpp"
#include "ruledarr/numeric.hpp"
#include "ruledarr/surface.hpp"

namespace ruledarr {

/// Sparse multiplicity counts: k -> t_k, the number of k-fold points.
/// Keys are >= 2; zero entries are allowed but never required.
using Multiplicities = std::map<std::int64_t, Integer>;

/// Combinatorial data of a transversal arrangement of `d` curves, all in
/// the numerical class `cls` on `surface`.
///
/// Construction only checks the shape (d >= 1, keys >= 2, counts >= 0).
/// Everything else is the job of validate_star / validate_extra.
struct ArrangementProfile {
  RuledSurface surface;
  NumClass cls;
  std::int64_t d;
  Multiplicities t;
  bool c0_disjoint = false;
  // User assertion that some four curves share no common point (a = 1 case).
  bool a1_four_curve_flag = false;

  ArrangementProfile(RuledSurface surface_, NumClass cls_, std::int64_t d_,
                     Multiplicities t_, bool c0_disjoint_ = false,
                     bool a1_four_curve_flag_ = false);

  /// t_k, zero when absent.
  Integer t_at(std::int64_t k) const;
};

struct ProfileStats {
  Integer h;  // 2ab - a^2 e
  Integer f0;
  Integer f1;
  Integer f2;
  Integer sum_rp_sq;
};

ProfileStats stats(const ArrangementProfile& p);

/// Check names emitted by validate_star.
namespace check_names {
inline constexpr const char* kEAtLeast4 = "e_ge_4";
inline constexpr const char* kDAtLeast4 = "d_ge_4";
inline constexpr const char* kAPositive = "a_gt_0";
inline constexpr const char* kBAtLeastAE = "b_ge_ae";
inline constexpr const char* kNoFullPoint = "t_d_zero";
inline constexpr const char* kCountingIdentity = "counting_identity";
inline constexpr const char* kFourCurve = "four_curve_condition";
}  // namespace check_names

/// Standing assumptions: e >= 4, d >= 4, a > 0, b >= ae, t_k = 0 for k >= d,
/// and f2 - f1 = h d (d - 1).
ValidationReport validate_star(const ArrangementProfile& p);

/// Extra assumption needed for nefness of K_Y: a >= 2, or a = 1 with some
/// four curves having no common point. A profile cannot witness the latter,
/// so an unflagged a = 1 profile reports Unverifiable.
ValidationReport validate_extra(const ArrangementProfile& p);

/// Throws ValidationFailed naming every failing check.
void require_star(const ArrangementProfile& p);

/// True iff validate_extra has no Fail and no Unverifiable.
bool satisfies_extra(const ArrangementProfile& p);

/// H(X, C) = (h d^2 - f2) / f0, cross-checked against (h d - f1) / f0.
Rational harbourne_constant(const ArrangementProfile& p);

/// All singular points are double points: t_2 = binom(d, 2) * h. The
/// four-curve flag is set.
ArrangementProfile generic_profile(const RuledSurface& s, const NumClass& cls,
                                   std::int64_t d);

}  // namespace ruledarr
