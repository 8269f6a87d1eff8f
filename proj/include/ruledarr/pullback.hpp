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
#include <string>
#include <vector>

#include "ruledarr/arrangement.hpp"

namespace ruledarr {

/// A line arrangement in the projective plane, kept as its multiplicity
/// counts only.
struct LineArrangement {
  std::string name;
  std::int64_t d = 0;
  Multiplicities t;

  /// Throws InvalidArgument unless sum_k binom(k, 2) t_k = binom(d, 2).
  LineArrangement(std::string name_, std::int64_t d_, Multiplicities t_);
};

/// Klein's arrangement: 21 lines, t3 = 28, t4 = 21.
LineArrangement klein();

/// Wiman's arrangement: 45 lines, t3 = 120, t4 = 45, t5 = 36.
LineArrangement wiman();

/// Built-in arrangements in name order.
std::vector<LineArrangement> gallery();

/// H(P^2, L) = (d^2 - sum k^2 t_k) / sum t_k.
Rational plane_harbourne_constant(const LineArrangement& L);

/// Pulls `L` back along the degree-e cover X_e -> X_1 composed with
/// X_1 -> P^2: every line becomes a curve of class C0 + e f, each k-fold
/// point has e preimages, and no curve meets C0. Needs e >= 4.
ArrangementProfile pullback(const LineArrangement& L, const Integer& e);

}  // namespace ruledarr
