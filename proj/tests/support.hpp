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

// Independent oracles shared by the test binaries. Nothing here calls into
// the library except to build its value types.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ruledarr/arrangement.hpp"
#include "ruledarr/incidence.hpp"
#include "ruledarr/pullback.hpp"

namespace oracle {

using ruledarr::Integer;
using ruledarr::Rational;
using Points = std::vector<std::vector<std::int64_t>>;

/// Seed from RULEDARR_TEST_SEED or a fixed default; printed once per binary.
std::uint64_t seed();
std::mt19937_64 rng(std::uint64_t salt);

/// Klein's 21 lines as the involutions of PSL(2,7), built from matrices
/// over F_7. Triple points are {s, t, sts} with st of order 3; quadruple
/// points are the non-central involutions of the dihedral group of order 8
/// generated by s, t with st of order 4.
Points klein_plane_points();

/// Every plane point repeated `copies` times (the pull-back along X_e).
Points replicate(const Points& pts, std::int64_t copies);

/// Plain rational Gaussian elimination with row swaps on the d x f0
/// incidence matrix.
std::size_t rank_q(std::int64_t d, const Points& pts);

/// Number of points containing both curves i and j, by direct scan.
std::int64_t cooccurrence(const Points& pts, std::int64_t i, std::int64_t j);

/// Sum of r_p^2 and the k-counts, straight from the points.
Integer sum_rp_sq(const Points& pts);
ruledarr::Multiplicities counts(const Points& pts);

/// Random structure with every pair of curves sharing exactly h points and
/// no point on all d curves: start from h pure double points per pair and
/// repeatedly fuse a random curve subset U (3 <= |U| <= d-1) into one point,
/// deleting one pure double point per pair inside U.
Points random_structure(std::mt19937_64& gen, std::int64_t d, std::int64_t h, int merges);

/// (a, b, e, g) with e >= 4, a >= 1, b >= ae.
struct Params {
  Integer g, e, a, b;
  Integer h() const { return 2 * a * b - a * a * e; }
};

/// A random valid profile realized by a random structure. `b_eq_ae` forces
/// the C0-disjoint shape (and sets the flag).
ruledarr::ArrangementProfile random_profile(std::mt19937_64& gen, bool b_eq_ae = false);

/// Test-side transcription of the three cover formulas.
Rational euler_norm(const Rational& g, const Rational& e, const Rational& a, const Rational& b,
                    const Rational& d, const Rational& t2, const Rational& f0,
                    const Rational& f1);
Rational c1sq_norm(const Rational& g, const Rational& e, const Rational& a, const Rational& b,
                   const Rational& d, const Rational& t2, const Rational& f0,
                   const Rational& f1);

/// Line arrangements with known combinatorics for the bound corpus.
std::vector<ruledarr::LineArrangement> plane_corpus();

}  // namespace oracle
