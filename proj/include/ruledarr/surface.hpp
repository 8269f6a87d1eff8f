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

#include "ruledarr/numeric.hpp"

namespace ruledarr {

/// A geometrically ruled surface, seen through its numerical lattice
/// Num(X) = Z*C0 + Z*f. Genus is that of the base curve; `e` is the
/// invariant with C0^2 = -e.
struct RuledSurface {
  Integer genus;
  Integer e;

  RuledSurface(Integer genus_, Integer e_);

  friend bool operator==(const RuledSurface&, const RuledSurface&) = default;
};

/// Numerical class a*C0 + b*f.
struct NumClass {
  Integer a;
  Integer b;

  friend NumClass operator+(const NumClass& x, const NumClass& y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend NumClass operator-(const NumClass& x) { return {-x.a, -x.b}; }
  friend bool operator==(const NumClass&, const NumClass&) = default;
};

/// Intersection pairing from C0^2 = -e, C0.f = 1, f^2 = 0.
Integer intersect(const RuledSurface& s, const NumClass& x, const NumClass& y);

/// K_X = -2*C0 + (2g - 2 - e)*f.
NumClass canonical_class(const RuledSurface& s);

/// Ampleness criterion a > 0 and b > a*e. Only meaningful for e >= 0;
/// throws NonNegativeEOnly otherwise.
bool is_ample(const RuledSurface& s, const NumClass& x);

/// Topological Euler number 4 - 4g.
Integer euler_characteristic(const RuledSurface& s);

/// K_X^2 = 8(1 - g).
Integer canonical_self_intersection(const RuledSurface& s);

/// 2g(C) - 2 for a smooth curve C in class x, from the closed form
/// -a^2 e + 2ab + ae + a(2g - 2) - 2b.
Integer curve_genus_term(const RuledSurface& s, const NumClass& x);

/// C_i.C_j = 2ab - a^2 e for two members of class x.
Integer pairwise_intersection(const RuledSurface& s, const NumClass& x);

}  // namespace ruledarr
