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
#include <optional>
#include <string>

#include "ruledarr/arrangement.hpp"
#include "ruledarr/checks.hpp"
#include "ruledarr/incidence.hpp"
#include "ruledarr/numeric.hpp"

namespace ruledarr {

/// T.E_p = -1 + (r_p - 1)/2 for the exceptional curve over an r_p-fold
/// point; never negative for r_p >= 3.
Rational t_dot_exceptional(std::int64_t r_p);

struct StrictTransformPairing {
  Rational value;  // T.C_j'
  bool nonnegative = false;
  Rational f0_minus_half_t2;  // f0^j - t2^j / 2
  Rational chain_lower;       // h (d - 1) / k, k the top multiplicity on C_j
  bool chain_holds = false;   // f0^j - t2^j/2 >= h(d-1)/k >= h
};

/// T.C_j' = 2ae - 2b + (2g - e - 2)a + h/2 + f0^j - t2^j/2 for the strict
/// transform of one curve. Throws InconsistentCurveStats when `cs` cannot
/// come from a curve of `p`.
StrictTransformPairing t_dot_strict_transform(const ArrangementProfile& p,
                                              const CurveStats& cs);

/// Hirzebruch's local contribution m(E) for the two configurations used.
enum class MKind { MinusTwoRational, RationalSelfIntersectionMinusE };

struct MValue {
  MKind kind;
  Rational value;
};

/// 9/2 for a single (-2)-curve; 2 + e + 1/e for a rational curve with
/// self-intersection -e (e > 0).
MValue m_value(MKind kind, const Integer& e = 0);

/// The Hirzebruch-type inequality, in the count form
///   t2 + (3/4) t3 >= -16 + 16g + sum_{k>=5} (2k - 9) t_k
///                    + d(e(5a^2 - 2a) - 10ab - 4ag + 4a + 4b)
/// and in the cover form
///   16 - 16g + d(2ae - 5a^2 e + 10ab + 4ag - 4a - 4b)
///     + 9f0 - 2f1 - 4t2 - t4 - (9/4) t3 >= 0.
struct HirzebruchInequality {
  Rational lhs;
  Rational rhs;
  bool holds = false;
  Rational cover_form_residual;
  bool cover_form_holds = false;
};

HirzebruchInequality hirzebruch_inequality(const ArrangementProfile& p);

/// Lower bound on H(X, C) valid under the extra assumption:
///   -9/2 - 8/f0 + (d/f0)((ae - 2b)/2 (3a - 2) - 2a(g - 1))
///   + (16g + 4t2 + t4)/(2 f0) + 9 t3/(8 f0).
Rational general_bound(const ArrangementProfile& p);

/// Sharper bound when no curve meets C0 (forcing b = ae), from the extra
/// rational (-e)-curves on Y:
///   -9/2 + (d/f0)(ae(2 - 3a) - 4a(g - 1))/2 + (16g + 4t2 + t4)/(2 f0) + 9 t3/(8 f0).
/// Also carries the modified inequality with 4(e + 1/e) - 8 and its relaxed
/// form with the constant 9.
struct C0DisjointBound {
  Rational bound;
  Rational lhs;  // t2 + (3/4) t3
  Rational c0_rhs;
  bool c0_holds = false;
  Rational relaxed_rhs;
  bool relaxed_holds = false;
};

C0DisjointBound c0_disjoint_bound(const ArrangementProfile& p);

/// Lower bound on the global constant H_{a,b}(X):
///   b > ae:  -11/2 + ((ae - 2b)/2)(3a - 2) - 2ag
///   b = ae:  -9/2 + (ae(2 - 3a) - 4ag)/2
/// Throws ParameterRange for e < 4, a <= 0 or b < ae.
Rational global_bound(const RuledSurface& s, const Integer& a, const Integer& b);

/// Side conditions used to pass from the per-arrangement bounds to the
/// global one, evaluated on a concrete profile.
struct GlobalBoundClaims {
  bool applicable = false;       // b > ae
  bool f0_exceeds_h_plus_one = false;  // f0 >= 2ab - a^2 e + 2
  bool f0_at_least_8 = false;
  bool f0_at_least_d = false;
};

GlobalBoundClaims global_bound_claims(const ArrangementProfile& p);

/// Self-intersection of the strict transform after blowing up every
/// singular point, D~^2 = f0 H(X, C), against its lower bound (the C0-disjoint
/// variant when the profile qualifies).
struct StrictTransformBound {
  Rational dtilde_sq_lower;
  Rational dtilde_sq;
  bool holds = false;
  bool c0_variant = false;
};

StrictTransformBound strict_transform_bound(const ArrangementProfile& p);

/// Everything above for one profile. Bounds are reported even when the
/// extra assumption fails or is unverifiable; `extra_assumption` says which.
struct BoundReport {
  Rational harbourne;
  Rational general_rhs;
  std::optional<Rational> c0_disjoint_rhs;
  std::optional<Rational> global_rhs;
  Rational hirzebruch_lhs;
  Rational hirzebruch_rhs;
  Rational dtilde_sq;
  Rational dtilde_sq_lower;
  CheckStatus extra_assumption = CheckStatus::Unverifiable;
  bool boundary_b_eq_ae = false;
  std::map<std::string, bool> satisfied;
};

BoundReport bound_report(const ArrangementProfile& p);

}  // namespace ruledarr
