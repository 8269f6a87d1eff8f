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

#include "ruledarr/bounds.hpp"

#include <algorithm>
#include <string>

#include "ruledarr/error.hpp"

namespace ruledarr {

namespace {

// The profile quantities every bound consumes, as rationals.
struct BoundInputs {
  Rational g, e, a, b, d, t2, t3, t4, f0, f1, tail;  // tail = sum_{k>=5}(2k-9)t_k
};

BoundInputs bound_inputs(const ArrangementProfile& p) {
  const ProfileStats st = stats(p);
  Integer tail = 0;
  for (const auto& [k, count] : p.t) {
    if (k >= 5) tail += (2 * k - 9) * count;
  }
  return {Rational(p.surface.genus), Rational(p.surface.e), Rational(p.cls.a),
          Rational(p.cls.b),         Rational(Integer(p.d)), Rational(p.t_at(2)),
          Rational(p.t_at(3)),       Rational(p.t_at(4)),    Rational(st.f0),
          Rational(st.f1),           Rational(tail)};
}

Rational positive_terms(const BoundInputs& in) {
  return Rational((16 * in.g + 4 * in.t2 + in.t4) / (2 * in.f0) + 9 * in.t3 / (8 * in.f0));
}

void require_points(const ProfileStats& st) {
  require(st.f0 > 0, ErrorCode::EmptySingularLocus, "profile has no singular points");
}

const Rational kHalf(1, 2);

}  // namespace

Rational t_dot_exceptional(std::int64_t r_p) {
  require(r_p >= 3, ErrorCode::PreconditionViolated,
          "T.E_p needs r_p >= 3, got " + std::to_string(r_p));
  return Rational(-1 + make_rational(Integer(r_p - 1), Integer(2)));
}

StrictTransformPairing t_dot_strict_transform(const ArrangementProfile& p,
                                              const CurveStats& cs) {
  require_star(p);
  const ProfileStats st = stats(p);

  Integer f0 = 0;
  Integer excess = 0;
  std::int64_t top = 0;
  for (const auto& [k, n] : cs.t_k_j) {
    require(k >= 2 && k < p.d, ErrorCode::InconsistentCurveStats,
            "curve carries a " + std::to_string(k) + "-fold point with d = " +
                std::to_string(p.d));
    require(n >= 0 && n <= p.t_at(k), ErrorCode::InconsistentCurveStats,
            "t_" + std::to_string(k) + "^j exceeds the global count");
    f0 += n;
    excess += (k - 1) * n;
    if (n > 0) top = std::max(top, k);
  }
  require(f0 == cs.f0_j, ErrorCode::InconsistentCurveStats,
          "f0^j does not equal the sum of t_k^j");
  const auto projected = [&](std::int64_t k) {
    auto it = cs.t_k_j.find(k);
    return it == cs.t_k_j.end() ? Integer(0) : it->second;
  };
  require(projected(2) == cs.t2_j && projected(6) == cs.t6_j,
          ErrorCode::InconsistentCurveStats, "t2^j / t6^j projections are stale");
  require(excess == st.h * (p.d - 1), ErrorCode::InconsistentCurveStats,
          "sum over the curve of (r_p - 1) is " + excess.get_str() + ", expected " +
              Integer(st.h * (p.d - 1)).get_str());

  const Rational a(p.cls.a), b(p.cls.b), e(p.surface.e), g(p.surface.genus);
  const Rational h(st.h);
  StrictTransformPairing out;
  out.f0_minus_half_t2 = Rational(cs.f0_j) - kHalf * Rational(cs.t2_j);
  out.value = Rational(2 * a * e - 2 * b + (2 * g - e - 2) * a + h / 2) + out.f0_minus_half_t2;
  out.nonnegative = sgn(out.value) >= 0;
  if (top > 0) {
    out.chain_lower = Rational(h * (p.d - 1) / top);
    out.chain_holds = out.f0_minus_half_t2 >= out.chain_lower && out.chain_lower >= h;
  }
  return out;
}

MValue m_value(MKind kind, const Integer& e) {
  switch (kind) {
    case MKind::MinusTwoRational:
      return {kind, Rational(9, 2)};
    case MKind::RationalSelfIntersectionMinusE:
      require(e > 0, ErrorCode::PreconditionViolated, "m(H) needs e > 0");
      return {kind, Rational(2 + Rational(e) + 1 / Rational(e))};
  }
  fail(ErrorCode::Internal, "unknown m-value kind");
}

HirzebruchInequality hirzebruch_inequality(const ArrangementProfile& p) {
  require_star(p);
  const BoundInputs in = bound_inputs(p);
  const auto& [g, e, a, b, d, t2, t3, t4, f0, f1, tail] = in;
  HirzebruchInequality out;
  out.lhs = t2 + Rational(3, 4) * t3;
  out.rhs = Rational(-16 + 16 * g + tail +
                     d * (e * (5 * a * a - 2 * a) - 10 * a * b - 4 * a * g + 4 * a + 4 * b));
  out.holds = out.lhs >= out.rhs;
  out.cover_form_residual =
      Rational(16 - 16 * g +
               d * (2 * a * e - 5 * a * a * e + 10 * a * b + 4 * a * g - 4 * a - 4 * b) +
               9 * f0 - 2 * f1 - 4 * t2 - t4 - Rational(9, 4) * t3);
  out.cover_form_holds = sgn(out.cover_form_residual) >= 0;
  require(out.holds == out.cover_form_holds &&
              out.cover_form_residual == out.lhs - out.rhs,
          ErrorCode::Internal, "Hirzebruch inequality forms disagree");
  return out;
}

Rational general_bound(const ArrangementProfile& p) {
  require_star(p);
  require_points(stats(p));
  const BoundInputs in = bound_inputs(p);
  const auto& [g, e, a, b, d, t2, t3, t4, f0, f1, tail] = in;
  return Rational(Rational(-9, 2) - 8 / f0 +
                  d / f0 * ((a * e - 2 * b) / 2 * (3 * a - 2) - 2 * a * (g - 1)) +
                  positive_terms(in));
}

C0DisjointBound c0_disjoint_bound(const ArrangementProfile& p) {
  require_star(p);
  require(p.c0_disjoint, ErrorCode::C0DisjointRequired,
          "bound needs an arrangement disjoint from C0");
  require(p.cls.b == p.cls.a * p.surface.e, ErrorCode::BNotAE,
          "a curve disjoint from C0 has b = ae");
  require_points(stats(p));
  const BoundInputs in = bound_inputs(p);
  const auto& [g, e, a, b, d, t2, t3, t4, f0, f1, tail] = in;

  C0DisjointBound out;
  out.bound = Rational(Rational(-9, 2) + d / f0 * (a * e * (2 - 3 * a) - 4 * a * (g - 1)) / 2 +
                       positive_terms(in));
  out.lhs = t2 + Rational(3, 4) * t3;
  const Rational d_term = d * (-5 * a * a * e + 2 * a * e - 4 * a * g + 4 * a);
  out.c0_rhs = Rational(4 * (e + 1 / e) - 8 + 16 * g + tail + d_term);
  out.c0_holds = out.lhs >= out.c0_rhs;
  out.relaxed_rhs = Rational(9 + 16 * g + tail + d_term);
  out.relaxed_holds = out.lhs >= out.relaxed_rhs;

  // Same inequality before the b = ae substitution, with the extra m-values
  // 2^{d-1}(2 + e + 1/e) moved to the left.
  const Rational m_h = m_value(MKind::RationalSelfIntersectionMinusE, p.surface.e).value;
  const Rational residual =
      Rational(16 - 16 * g +
               d * (2 * a * e - 5 * a * a * e + 10 * a * b + 4 * a * g - 4 * a - 4 * b) +
               9 * f0 - 2 * f1 - 4 * t2 - t4 - Rational(9, 4) * t3 - 4 * m_h);
  require(residual == out.lhs - out.c0_rhs, ErrorCode::Internal,
          "C0-disjoint inequality forms disagree");
  return out;
}

Rational global_bound(const RuledSurface& s, const Integer& a_in, const Integer& b_in) {
  require(s.e >= 4, ErrorCode::ParameterRange, "global bound needs e >= 4");
  require(a_in > 0, ErrorCode::ParameterRange, "global bound needs a > 0");
  const Rational a(a_in), b(b_in), e(s.e), g(s.genus);
  if (b_in > a_in * s.e) {
    return Rational(Rational(-11, 2) + (a * e - 2 * b) / 2 * (3 * a - 2) - 2 * a * g);
  }
  if (b_in == a_in * s.e) {
    return Rational(Rational(-9, 2) + (a * e * (2 - 3 * a) - 4 * a * g) / 2);
  }
  fail(ErrorCode::ParameterRange, "global bound needs b >= ae");
}

GlobalBoundClaims global_bound_claims(const ArrangementProfile& p) {
  const ProfileStats st = stats(p);
  GlobalBoundClaims out;
  out.applicable = p.cls.b > p.cls.a * p.surface.e;
  out.f0_exceeds_h_plus_one = st.f0 >= st.h + 2;
  out.f0_at_least_8 = st.f0 >= 8;
  out.f0_at_least_d = st.f0 >= p.d;
  return out;
}

StrictTransformBound strict_transform_bound(const ArrangementProfile& p) {
  const Rational harbourne = harbourne_constant(p);
  const BoundInputs in = bound_inputs(p);
  const auto& [g, e, a, b, d, t2, t3, t4, f0, f1, tail] = in;
  StrictTransformBound out;
  out.dtilde_sq = f0 * harbourne;
  out.c0_variant = p.c0_disjoint && p.cls.b == p.cls.a * p.surface.e;
  const Rational tail_terms = Rational(8 * g + 2 * t2 + t4 / 2 + 9 * t3 / 8);
  Rational per_point;
  if (out.c0_variant) {
    out.dtilde_sq_lower = Rational(Rational(-9, 2) * f0 +
                                   d * ((a * e * (2 - 3 * a) - 4 * a * (g - 1)) / 2) +
                                   tail_terms);
    per_point = c0_disjoint_bound(p).bound;
  } else {
    out.dtilde_sq_lower =
        Rational(-8 - Rational(9, 2) * f0 +
                 d * ((a * e - 2 * b) / 2 * (3 * a - 2) - 2 * a * (g - 1)) + tail_terms);
    per_point = general_bound(p);
  }
  require(out.dtilde_sq_lower == f0 * per_point, ErrorCode::Internal,
          "strict-transform bound is not f0 times the per-point bound");
  out.holds = out.dtilde_sq >= out.dtilde_sq_lower;
  return out;
}

BoundReport bound_report(const ArrangementProfile& p) {
  BoundReport r;
  r.harbourne = harbourne_constant(p);
  r.general_rhs = general_bound(p);
  const HirzebruchInequality hi = hirzebruch_inequality(p);
  r.hirzebruch_lhs = hi.lhs;
  r.hirzebruch_rhs = hi.rhs;
  r.boundary_b_eq_ae = p.cls.b == p.cls.a * p.surface.e;
  const ValidationReport extra = validate_extra(p);
  r.extra_assumption = extra.checks.front().status;

  auto& sat = r.satisfied;
  sat["harbourne_ge_general"] = r.harbourne >= r.general_rhs;
  sat["hirzebruch_count_form"] = hi.holds;
  sat["hirzebruch_cover_form"] = hi.cover_form_holds;

  if (p.c0_disjoint && r.boundary_b_eq_ae) {
    const C0DisjointBound c0 = c0_disjoint_bound(p);
    r.c0_disjoint_rhs = c0.bound;
    sat["harbourne_ge_c0_disjoint"] = r.harbourne >= c0.bound;
    sat["c0_form"] = c0.c0_holds;
    sat["c0_relaxed_form"] = c0.relaxed_holds;
  }

  r.global_rhs = global_bound(p.surface, p.cls.a, p.cls.b);
  if (!r.boundary_b_eq_ae) {
    sat["general_ge_global"] = r.general_rhs >= *r.global_rhs;
    sat["harbourne_ge_global"] = r.harbourne >= *r.global_rhs;
  } else if (r.c0_disjoint_rhs) {
    sat["c0_disjoint_ge_global"] = *r.c0_disjoint_rhs >= *r.global_rhs;
    sat["harbourne_ge_global"] = r.harbourne >= *r.global_rhs;
  }

  const GlobalBoundClaims claims = global_bound_claims(p);
  sat["f0_at_least_d"] = claims.f0_at_least_d;
  if (claims.applicable) {
    sat["f0_exceeds_h_plus_one"] = claims.f0_exceeds_h_plus_one;
    sat["f0_at_least_8"] = claims.f0_at_least_8;
  }

  const StrictTransformBound stb = strict_transform_bound(p);
  r.dtilde_sq = stb.dtilde_sq;
  r.dtilde_sq_lower = stb.dtilde_sq_lower;
  sat["strict_transform"] = stb.holds;
  return r;
}

}  // namespace ruledarr
