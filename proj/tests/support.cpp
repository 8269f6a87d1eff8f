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

#include "support.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <iostream>
#include <map>
#include <set>

namespace oracle {

namespace {

using Mat = std::array<int, 4>;  // a b / c d over F_7

constexpr int kP = 7;

Mat mul(const Mat& x, const Mat& y) {
  return {(x[0] * y[0] + x[1] * y[2]) % kP, (x[0] * y[1] + x[1] * y[3]) % kP,
          (x[2] * y[0] + x[3] * y[2]) % kP, (x[2] * y[1] + x[3] * y[3]) % kP};
}

// Representative of {M, -M}.
Mat canon(const Mat& m) {
  Mat neg;
  for (int i = 0; i < 4; ++i) neg[i] = (kP - m[i]) % kP;
  return std::min(m, neg);
}

const Mat kIdentity = canon({1, 0, 0, 1});

int order(const Mat& m) {
  Mat x = canon(m);
  for (int n = 1; n <= 8; ++n) {
    if (x == kIdentity) return n;
    x = canon(mul(x, m));
  }
  return -1;
}

}  // namespace

std::uint64_t seed() {
  static const std::uint64_t value = [] {
    std::uint64_t s = 20260517;
    if (const char* env = std::getenv("RULEDARR_TEST_SEED")) s = std::strtoull(env, nullptr, 10);
    std::cout << "test seed: " << s << '\n';
    return s;
  }();
  return value;
}

std::mt19937_64 rng(std::uint64_t salt) { return std::mt19937_64(seed() ^ (salt * 0x9e3779b97f4a7c15ULL)); }

Points klein_plane_points() {
  std::set<Mat> group;
  for (int a = 0; a < kP; ++a)
    for (int b = 0; b < kP; ++b)
      for (int c = 0; c < kP; ++c)
        for (int d = 0; d < kP; ++d)
          if (((a * d - b * c) % kP + kP) % kP == 1) group.insert(canon({a, b, c, d}));

  std::vector<Mat> involutions;
  for (const Mat& m : group) {
    if (order(m) == 2) involutions.push_back(m);
  }
  std::map<Mat, std::int64_t> index;
  for (std::size_t i = 0; i < involutions.size(); ++i) index[involutions[i]] = std::int64_t(i) + 1;

  std::set<std::vector<std::int64_t>> triples, quads;
  for (const Mat& s : involutions) {
    for (const Mat& t : involutions) {
      if (s == t) continue;
      const Mat st = canon(mul(s, t));
      const int o = order(st);
      if (o == 3) {
        std::vector<std::int64_t> pt{index[s], index[t], index[canon(mul(mul(s, t), s))]};
        std::sort(pt.begin(), pt.end());
        triples.insert(pt);
      } else if (o == 4) {
        std::vector<std::int64_t> pt;
        Mat r = kIdentity;
        for (int k = 0; k < 4; ++k) {
          pt.push_back(index[canon(mul(s, r))]);
          r = canon(mul(r, st));
        }
        std::sort(pt.begin(), pt.end());
        quads.insert(pt);
      }
    }
  }
  Points out(triples.begin(), triples.end());
  out.insert(out.end(), quads.begin(), quads.end());
  return out;
}

Points replicate(const Points& pts, std::int64_t copies) {
  Points out;
  for (const auto& p : pts)
    for (std::int64_t c = 0; c < copies; ++c) out.push_back(p);
  return out;
}

std::size_t rank_q(std::int64_t d, const Points& pts) {
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(d),
                                       std::vector<Rational>(pts.size(), Rational(0)));
  for (std::size_t c = 0; c < pts.size(); ++c)
    for (std::int64_t curve : pts[c]) m[static_cast<std::size_t>(curve - 1)][c] = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < pts.size() && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][col] == 0) continue;
      const Rational factor = m[r][col] / m[rank][col];
      for (std::size_t k = col; k < pts.size(); ++k) m[r][k] -= factor * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::int64_t cooccurrence(const Points& pts, std::int64_t i, std::int64_t j) {
  std::int64_t n = 0;
  for (const auto& p : pts) {
    const bool has_i = std::find(p.begin(), p.end(), i) != p.end();
    const bool has_j = std::find(p.begin(), p.end(), j) != p.end();
    n += has_i && has_j;
  }
  return n;
}

Integer sum_rp_sq(const Points& pts) {
  Integer s = 0;
  for (const auto& p : pts) s += Integer(static_cast<long>(p.size() * p.size()));
  return s;
}

ruledarr::Multiplicities counts(const Points& pts) {
  ruledarr::Multiplicities t;
  for (const auto& p : pts) t[static_cast<std::int64_t>(p.size())] += 1;
  return t;
}

Points random_structure(std::mt19937_64& gen, std::int64_t d, std::int64_t h, int merges) {
  // remaining[i][j]: pure double points left for the pair i < j.
  std::vector<std::vector<std::int64_t>> remaining(
      static_cast<std::size_t>(d + 1), std::vector<std::int64_t>(static_cast<std::size_t>(d + 1), h));
  Points fused;
  std::uniform_int_distribution<std::int64_t> size_dist(3, d - 1);
  for (int m = 0; m < merges; ++m) {
    std::vector<std::int64_t> curves(static_cast<std::size_t>(d));
    for (std::int64_t i = 0; i < d; ++i) curves[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(curves.begin(), curves.end(), gen);
    curves.resize(static_cast<std::size_t>(size_dist(gen)));
    std::sort(curves.begin(), curves.end());
    bool available = true;
    for (std::size_t x = 0; x < curves.size() && available; ++x)
      for (std::size_t y = x + 1; y < curves.size(); ++y)
        if (remaining[curves[x]][curves[y]] == 0) available = false;
    if (!available) continue;
    for (std::size_t x = 0; x < curves.size(); ++x)
      for (std::size_t y = x + 1; y < curves.size(); ++y) --remaining[curves[x]][curves[y]];
    fused.push_back(curves);
  }
  Points out;
  for (std::int64_t i = 1; i <= d; ++i)
    for (std::int64_t j = i + 1; j <= d; ++j)
      for (std::int64_t c = 0; c < remaining[i][j]; ++c) out.push_back({i, j});
  out.insert(out.end(), fused.begin(), fused.end());
  std::shuffle(out.begin(), out.end(), gen);
  return out;
}

ruledarr::ArrangementProfile random_profile(std::mt19937_64& gen, bool b_eq_ae) {
  std::uniform_int_distribution<int> e_dist(4, 6), off_dist(0, 2), g_dist(0, 3), d_dist(4, 11),
      merge_dist(0, 12);
  const std::int64_t e = e_dist(gen);
  const std::int64_t b = e + (b_eq_ae ? 0 : off_dist(gen));
  const std::int64_t h = 2 * b - e;
  const std::int64_t d = d_dist(gen);
  const Points pts = random_structure(gen, d, h, merge_dist(gen));
  return ruledarr::ArrangementProfile(ruledarr::RuledSurface(g_dist(gen), e),
                                      ruledarr::NumClass{1, b}, d, counts(pts), b_eq_ae, true);
}

Rational euler_norm(const Rational& g, const Rational& e, const Rational& a, const Rational& b,
                    const Rational& d, const Rational& t2, const Rational& f0,
                    const Rational& f1) {
  (void)f0;
  return 16 - 16 * g + d * (-2 * a * a * e + 4 * a * b + 2 * a * e + 4 * a * g - 4 * a - 4 * b) +
         f1 - t2;
}

Rational c1sq_norm(const Rational& g, const Rational& e, const Rational& a, const Rational& b,
                   const Rational& d, const Rational& t2, const Rational& f0,
                   const Rational& f1) {
  return 32 - 32 * g + d * (-a * a * e + 2 * a * b + 4 * a * e + 8 * a * g - 8 * a - 8 * b) -
         9 * f0 + 5 * f1 + t2;
}

std::vector<ruledarr::LineArrangement> plane_corpus() {
  using ruledarr::LineArrangement;
  std::vector<LineArrangement> out{ruledarr::klein(), ruledarr::wiman(),
                                   LineArrangement("hesse", 12, {{2, 12}, {4, 9}}),
                                   LineArrangement("dual_hesse", 9, {{3, 12}})};
  for (std::int64_t m = 2; m <= 6; ++m) {
    ruledarr::Multiplicities t{{3, m * m}};
    if (m == 3) {
      t[3] += 3;
    } else if (m >= 4) {
      t[m] = 3;
    } else {
      t[2] = 3;
    }
    out.emplace_back("ceva_" + std::to_string(m), 3 * m, t);
  }
  for (std::int64_t d = 5; d <= 9; ++d) {
    // Near-pencil: d - 1 lines through one point plus a general line.
    out.emplace_back("near_pencil_" + std::to_string(d), d,
                     ruledarr::Multiplicities{{2, d - 1}, {d - 1, 1}});
  }
  return out;
}

}  // namespace oracle
