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

#include "ruledarr/arrangement.hpp"

#include <string>
#include <utility>

#include "ruledarr/error.hpp"

namespace ruledarr {

ArrangementProfile::ArrangementProfile(RuledSurface surface_, NumClass cls_,
                                       std::int64_t d_, Multiplicities t_,
                                       bool c0_disjoint_, bool a1_four_curve_flag_)
    : surface(std::move(surface_)),
      cls(std::move(cls_)),
      d(d_),
      t(std::move(t_)),
      c0_disjoint(c0_disjoint_),
      a1_four_curve_flag(a1_four_curve_flag_) {
  require(d >= 1, ErrorCode::InvalidArgument,
          "number of curves must be positive, got " + std::to_string(d));
  for (const auto& [k, count] : t) {
    require(k >= 2, ErrorCode::InvalidArgument,
            "multiplicity keys start at 2, got " + std::to_string(k));
    require(count >= 0, ErrorCode::InvalidArgument,
            "t_" + std::to_string(k) + " is negative");
  }
}

Integer ArrangementProfile::t_at(std::int64_t k) const {
  auto it = t.find(k);
  return it == t.end() ? Integer(0) : it->second;
}

ProfileStats stats(const ArrangementProfile& p) {
  ProfileStats out{pairwise_intersection(p.surface, p.cls), 0, 0, 0, 0};
  for (const auto& [k, count] : p.t) {
    const Integer kk(k);
    out.f0 += count;
    out.f1 += kk * count;
    out.f2 += kk * kk * count;
  }
  out.sum_rp_sq = out.f2;
  return out;
}

ValidationReport validate_star(const ArrangementProfile& p) {
  using namespace check_names;
  const Integer& e = p.surface.e;
  const Integer& a = p.cls.a;
  const Integer& b = p.cls.b;
  ValidationReport report;

  report.add(kEAtLeast4, e >= 4, "e = " + e.get_str());
  report.add(kDAtLeast4, p.d >= 4, "d = " + std::to_string(p.d));
  report.add(kAPositive, a > 0, "a = " + a.get_str());
  const Integer ae = a * e;
  report.add(kBAtLeastAE, b >= ae, "b = " + b.get_str() + ", ae = " + ae.get_str());

  std::string full_detail;
  for (const auto& [k, count] : p.t) {
    if (k >= p.d && count != 0) {
      full_detail = "t_" + std::to_string(k) + " = " + count.get_str() +
                    " with d = " + std::to_string(p.d);
      break;
    }
  }
  report.add(kNoFullPoint, full_detail.empty(), full_detail);

  const ProfileStats st = stats(p);
  const Integer lhs = st.f2 - st.f1;
  const Integer rhs = st.h * p.d * (p.d - 1);
  report.add(kCountingIdentity, lhs == rhs,
             "f2 - f1 = " + lhs.get_str() + ", h d (d-1) = " + rhs.get_str());
  return report;
}

ValidationReport validate_extra(const ArrangementProfile& p) {
  ValidationReport report;
  const Integer& a = p.cls.a;
  if (a >= 2) {
    report.add(check_names::kFourCurve, true, "a >= 2");
  } else if (a == 1 && p.a1_four_curve_flag) {
    report.add(check_names::kFourCurve, true, "a = 1, asserted by caller");
  } else if (a == 1) {
    report.add({check_names::kFourCurve, CheckStatus::Unverifiable,
                "a = 1: four-curve condition needs an incidence structure"});
  } else {
    report.add(check_names::kFourCurve, false, "a = " + a.get_str());
  }
  return report;
}

void require_star(const ArrangementProfile& p) {
  const ValidationReport report = validate_star(p);
  if (report.passed()) return;
  std::string message = "profile violates standing assumptions:";
  for (const Check& c : report.checks) {
    if (c.status != CheckStatus::Pass) message += " " + c.name + " (" + c.detail + ")";
  }
  fail(ErrorCode::ValidationFailed, message);
}

bool satisfies_extra(const ArrangementProfile& p) {
  return validate_extra(p).passed();
}

Rational harbourne_constant(const ArrangementProfile& p) {
  require_star(p);
  const ProfileStats st = stats(p);
  require(st.f0 > 0, ErrorCode::EmptySingularLocus, "profile has no singular points");
  const Rational via_f2 = make_rational(st.h * p.d * p.d - st.f2, st.f0);
  const Rational via_f1 = make_rational(st.h * p.d - st.f1, st.f0);
  require(via_f2 == via_f1, ErrorCode::Internal,
          "Harbourne constant routes disagree");
  return via_f2;
}

ArrangementProfile generic_profile(const RuledSurface& s, const NumClass& cls,
                                   std::int64_t d) {
  require(d >= 4, ErrorCode::PreconditionViolated, "generic profile needs d >= 4");
  require(cls.a > 0, ErrorCode::PreconditionViolated, "generic profile needs a > 0");
  require(cls.b >= cls.a * s.e, ErrorCode::PreconditionViolated,
          "generic profile needs b >= ae");
  require(s.e >= 4, ErrorCode::PreconditionViolated, "generic profile needs e >= 4");
  const Integer h = pairwise_intersection(s, cls);
  Multiplicities t;
  t[2] = Integer(d) * (d - 1) / 2 * h;
  // Only double points, so no point lies on four curves.
  return ArrangementProfile(s, cls, d, std::move(t), false, true);
}

}  // namespace ruledarr
