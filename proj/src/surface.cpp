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

#include "ruledarr/surface.hpp"

#include <utility>

#include "ruledarr/error.hpp"

namespace ruledarr {

RuledSurface::RuledSurface(Integer genus_, Integer e_)
    : genus(std::move(genus_)), e(std::move(e_)) {
  require(genus >= 0, ErrorCode::InvalidArgument,
          "genus must be non-negative, got " + genus.get_str());
}

Integer intersect(const RuledSurface& s, const NumClass& x, const NumClass& y) {
  return Integer(x.a * y.b + x.b * y.a - s.e * x.a * y.a);
}

NumClass canonical_class(const RuledSurface& s) {
  return {Integer(-2), Integer(2 * s.genus - 2 - s.e)};
}

bool is_ample(const RuledSurface& s, const NumClass& x) {
  require(s.e >= 0, ErrorCode::NonNegativeEOnly,
          "ampleness criterion needs e >= 0, got e = " + s.e.get_str());
  return x.a > 0 && x.b > x.a * s.e;
}

Integer euler_characteristic(const RuledSurface& s) {
  return Integer(4 - 4 * s.genus);
}

Integer canonical_self_intersection(const RuledSurface& s) {
  return Integer(8 * (1 - s.genus));
}

Integer curve_genus_term(const RuledSurface& s, const NumClass& x) {
  const Integer& a = x.a;
  const Integer& b = x.b;
  return Integer(-a * a * s.e + 2 * a * b + a * s.e + a * (2 * s.genus - 2) - 2 * b);
}

Integer pairwise_intersection(const RuledSurface& s, const NumClass& x) {
  return intersect(s, x, x);
}

}  // namespace ruledarr
