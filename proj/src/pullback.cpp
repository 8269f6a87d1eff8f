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

#include "ruledarr/pullback.hpp"

#include <utility>

#include "ruledarr/error.hpp"

namespace ruledarr {

LineArrangement::LineArrangement(std::string name_, std::int64_t d_, Multiplicities t_)
    : name(std::move(name_)), d(d_), t(std::move(t_)) {
  require(d >= 2, ErrorCode::InvalidArgument, "line arrangement needs d >= 2");
  Integer pairs = 0;
  for (const auto& [k, count] : t) {
    require(k >= 2 && k <= d, ErrorCode::InvalidArgument,
            "multiplicity " + std::to_string(k) + " out of range");
    require(count >= 0, ErrorCode::InvalidArgument, "negative multiplicity count");
    pairs += Integer(k) * (k - 1) / 2 * count;
  }
  const Integer expected = Integer(d) * (d - 1) / 2;
  require(pairs == expected, ErrorCode::InvalidArgument,
          "line pairs counted through points: " + pairs.get_str() + ", binom(d,2) = " +
              expected.get_str());
}

LineArrangement klein() { return {"klein", 21, {{3, 28}, {4, 21}}}; }

LineArrangement wiman() { return {"wiman", 45, {{3, 120}, {4, 45}, {5, 36}}}; }

std::vector<LineArrangement> gallery() { return {klein(), wiman()}; }

Rational plane_harbourne_constant(const LineArrangement& L) {
  Integer s = 0, sum_sq = 0;
  for (const auto& [k, count] : L.t) {
    s += count;
    sum_sq += Integer(k) * k * count;
  }
  require(s > 0, ErrorCode::EmptySingularLocus, "line arrangement has no singular points");
  return make_rational(Integer(Integer(L.d) * L.d - sum_sq), s);
}

ArrangementProfile pullback(const LineArrangement& L, const Integer& e) {
  require(e >= 4, ErrorCode::PreconditionViolated, "pull-back needs e >= 4");
  Multiplicities t;
  for (const auto& [k, count] : L.t) {
    if (count != 0) t[k] = count * e;
  }
  return ArrangementProfile(RuledSurface(0, e), NumClass{1, e}, L.d, std::move(t),
                            /*c0_disjoint=*/true);
}

}  // namespace ruledarr
