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

#include "ruledarr/arrangement.hpp"
#include "ruledarr/numeric.hpp"

namespace ruledarr {

// Chern numbers of the desingularized (Z/2)^{d-1} cover Y branched along
// the arrangement. Every value is stored divided by 2^{d-3}.

/// The scalar inputs of the closed forms. Rational so that the formulas can
/// be probed away from integer points.
struct ChernInputs {
  Rational g, e, a, b, d, t2, f0, f1;
};

ChernInputs chern_inputs(const ArrangementProfile& p);

/// e(Y) / 2^{d-3} = 16 - 16g + d(-2a^2e + 4ab + 2ae + 4ag - 4a - 4b) + f1 - t2.
Rational euler_number_normalized(const ChernInputs& in);

/// c1^2(Y) / 2^{d-3} = 32 - 32g + d(-a^2e + 2ab + 4ae + 8ag - 8a - 8b) - 9f0 + 5f1 + t2.
Rational c1_squared_normalized(const ChernInputs& in);

/// (3e(Y) - c1^2(Y)) / 2^{d-3}
///   = 16 - 16g + d[(2b - ae)(5a - 2) + 4a(g - 1)] + 9f0 - 2f1 - 4t2.
Rational chern_difference_normalized(const ChernInputs& in);

struct ExceptionalCurveInvariants {
  std::int64_t r_p = 0;
  Integer self_intersection;    // -2^{r_p - 2}
  Integer euler_characteristic; // 2^{r_p - 2}(4 - r_p)
  Rational genus;               // (2 - e(F_p)) / 2
};

/// Invariants of a component F_p over the exceptional curve of an r_p-fold
/// point, r_p >= 3.
ExceptionalCurveInvariants fp_invariants(std::int64_t r_p);

struct CoverInvariants {
  std::int64_t scale_exponent = 0;  // d - 3
  Rational euler_norm;
  Rational c1sq_norm;
  Rational chern_difference_norm;
  Integer minus_two_curve_count;     // 2^{d-4} t3
  Integer elliptic_minus_four_count; // 2^{d-5} t4

  Rational absolute_euler() const;
  Rational absolute_c1sq() const;
};

/// Evaluates all three closed forms and checks 3 e - c1^2 against the
/// independently expanded difference. Throws ValidationFailed for a profile
/// outside the standing assumptions.
CoverInvariants cover_invariants(const ArrangementProfile& p);

/// H_C(2) = (3e(Y) - c1^2(Y)) / 2^{d-3}. Non-negative whenever K_Y is nef;
/// this is reported by callers, not enforced here.
Rational hirzebruch_polynomial(const ArrangementProfile& p);

struct PositivityHint {
  Rational c1sq_norm;
  bool general_type_guaranteed = false;  // a >= 8
};

/// K_Y^2 / 2^{d-3} via the regrouped form
/// 32 + (8ad - 32)g + d(a(2b - ae) + 4a(e - 2) - 8b) + 5f1 - 9f0 + t2.
PositivityHint canonical_positivity_hint(const ArrangementProfile& p);

}  // namespace ruledarr
