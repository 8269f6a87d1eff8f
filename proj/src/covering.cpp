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

#include "ruledarr/covering.hpp"

#include <string>

#include "ruledarr/error.hpp"

namespace ruledarr {

ChernInputs chern_inputs(const ArrangementProfile& p) {
  const ProfileStats st = stats(p);
  return {Rational(p.surface.genus), Rational(p.surface.e), Rational(p.cls.a),
          Rational(p.cls.b),         Rational(Integer(p.d)), Rational(p.t_at(2)),
          Rational(st.f0),           Rational(st.f1)};
}

Rational euler_number_normalized(const ChernInputs& in) {
  const auto& [g, e, a, b, d, t2, f0, f1] = in;
  return Rational(16 - 16 * g +
                  d * (-2 * a * a * e + 4 * a * b + 2 * a * e + 4 * a * g - 4 * a - 4 * b) +
                  f1 - t2);
}

Rational c1_squared_normalized(const ChernInputs& in) {
  const auto& [g, e, a, b, d, t2, f0, f1] = in;
  return Rational(32 - 32 * g +
                  d * (-a * a * e + 2 * a * b + 4 * a * e + 8 * a * g - 8 * a - 8 * b) -
                  9 * f0 + 5 * f1 + t2);
}

Rational chern_difference_normalized(const ChernInputs& in) {
  const auto& [g, e, a, b, d, t2, f0, f1] = in;
  return Rational(16 - 16 * g + d * ((2 * b - a * e) * (5 * a - 2) + 4 * a * (g - 1)) +
                  9 * f0 - 2 * f1 - 4 * t2);
}

ExceptionalCurveInvariants fp_invariants(std::int64_t r_p) {
  require(r_p >= 3, ErrorCode::PreconditionViolated,
          "only points of multiplicity >= 3 are blown up, got r_p = " + std::to_string(r_p));
  ExceptionalCurveInvariants out;
  out.r_p = r_p;
  const Integer scale = pow2(static_cast<std::uint64_t>(r_p - 2));
  out.self_intersection = -scale;
  out.euler_characteristic = scale * (4 - r_p);
  out.genus = make_rational(Integer(2 - out.euler_characteristic), Integer(2));
  return out;
}

Rational CoverInvariants::absolute_euler() const {
  return euler_norm * Rational(pow2(static_cast<std::uint64_t>(scale_exponent)));
}

Rational CoverInvariants::absolute_c1sq() const {
  return c1sq_norm * Rational(pow2(static_cast<std::uint64_t>(scale_exponent)));
}

CoverInvariants cover_invariants(const ArrangementProfile& p) {
  require_star(p);
  const ChernInputs in = chern_inputs(p);
  CoverInvariants out;
  out.scale_exponent = p.d - 3;
  out.euler_norm = euler_number_normalized(in);
  out.c1sq_norm = c1_squared_normalized(in);
  out.chern_difference_norm = chern_difference_normalized(in);
  require(3 * out.euler_norm - out.c1sq_norm == out.chern_difference_norm,
          ErrorCode::Internal, "Chern closed forms are inconsistent");

  out.minus_two_curve_count = pow2(static_cast<std::uint64_t>(p.d - 4)) * p.t_at(3);
  const Integer t4 = p.t_at(4);
  if (p.d >= 5) {
    out.elliptic_minus_four_count = pow2(static_cast<std::uint64_t>(p.d - 5)) * t4;
  } else {
    require(t4 % 2 == 0, ErrorCode::Internal, "2^{d-5} t4 is not integral");
    out.elliptic_minus_four_count = t4 / 2;
  }
  return out;
}

Rational hirzebruch_polynomial(const ArrangementProfile& p) {
  return cover_invariants(p).chern_difference_norm;
}

PositivityHint canonical_positivity_hint(const ArrangementProfile& p) {
  const CoverInvariants inv = cover_invariants(p);
  const ChernInputs in = chern_inputs(p);
  const auto& [g, e, a, b, d, t2, f0, f1] = in;
  PositivityHint hint;
  hint.c1sq_norm = Rational(32 + (8 * a * d - 32) * g +
                            d * (a * (2 * b - a * e) + 4 * a * (e - 2) - 8 * b) + 5 * f1 -
                            9 * f0 + t2);
  require(hint.c1sq_norm == inv.c1sq_norm, ErrorCode::Internal,
          "regrouped K_Y^2 disagrees with the c1^2 closed form");
  hint.general_type_guaranteed = p.cls.a >= 8;
  return hint;
}

}  // namespace ruledarr
