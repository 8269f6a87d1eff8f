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

#include "ruledarr/incidence.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <utility>

#include "ruledarr/error.hpp"

namespace ruledarr {

namespace {

// Row-major bitset over curve indices 0..d-1.
class CurveBits {
 public:
  explicit CurveBits(std::int64_t d) : words_((static_cast<std::size_t>(d) + 63) / 64, 0) {}
  void set(std::int64_t i) { words_[static_cast<std::size_t>(i) / 64] |= bit(i); }
  bool test(std::int64_t i) const {
    return (words_[static_cast<std::size_t>(i) / 64] & bit(i)) != 0;
  }

 private:
  static std::uint64_t bit(std::int64_t i) { return std::uint64_t{1} << (i % 64); }
  std::vector<std::uint64_t> words_;
};

}  // namespace

IncidenceStructure::IncidenceStructure(std::int64_t d, std::vector<CurveSet> points)
    : d_(d), points_(std::move(points)) {
  require(d_ >= 1, ErrorCode::InvalidArgument, "incidence needs d >= 1");
  for (std::size_t idx = 0; idx < points_.size(); ++idx) {
    CurveSet& curves = points_[idx];
    std::sort(curves.begin(), curves.end());
    require(curves.size() >= 2, ErrorCode::InvalidArgument,
            "point " + std::to_string(idx) + " lies on fewer than two curves");
    require(std::adjacent_find(curves.begin(), curves.end()) == curves.end(),
            ErrorCode::InvalidArgument,
            "point " + std::to_string(idx) + " repeats a curve index");
    require(curves.front() >= 1 && curves.back() <= d_, ErrorCode::InvalidArgument,
            "point " + std::to_string(idx) + " has a curve index outside 1.." +
                std::to_string(d_));
  }
}

CurveStats curve_stats(const IncidenceStructure& inc, std::int64_t curve) {
  require(curve >= 1 && curve <= inc.d(), ErrorCode::InvalidArgument,
          "curve index out of range: " + std::to_string(curve));
  CurveStats cs;
  cs.curve_index = curve;
  for (const auto& pt : inc.points()) {
    if (std::binary_search(pt.begin(), pt.end(), curve)) {
      cs.t_k_j[static_cast<std::int64_t>(pt.size())] += 1;
      cs.f0_j += 1;
    }
  }
  if (auto it = cs.t_k_j.find(2); it != cs.t_k_j.end()) cs.t2_j = it->second;
  if (auto it = cs.t_k_j.find(6); it != cs.t_k_j.end()) cs.t6_j = it->second;
  return cs;
}

std::vector<CurveStats> all_curve_stats(const IncidenceStructure& inc) {
  std::vector<CurveStats> out;
  out.reserve(static_cast<std::size_t>(inc.d()));
  for (std::int64_t j = 1; j <= inc.d(); ++j) out.push_back(curve_stats(inc, j));
  return out;
}

std::vector<std::vector<std::int64_t>> gram_matrix(const IncidenceStructure& inc) {
  const auto n = static_cast<std::size_t>(inc.d());
  std::vector<std::vector<std::int64_t>> gram(n, std::vector<std::int64_t>(n, 0));
  for (const auto& pt : inc.points()) {
    for (std::size_t x = 0; x < pt.size(); ++x) {
      for (std::size_t y = 0; y < pt.size(); ++y) {
        ++gram[static_cast<std::size_t>(pt[x] - 1)][static_cast<std::size_t>(pt[y] - 1)];
      }
    }
  }
  return gram;
}

Multiplicities multiplicities(const IncidenceStructure& inc) {
  Multiplicities t;
  for (const auto& pt : inc.points()) t[static_cast<std::int64_t>(pt.size())] += 1;
  return t;
}

ValidationReport audit(const IncidenceStructure& inc, const Integer& expected_h) {
  using namespace audit_names;
  ValidationReport report;
  const std::int64_t d = inc.d();
  const auto gram = gram_matrix(inc);

  std::string pair_detail;
  for (std::int64_t i = 0; i < d && pair_detail.empty(); ++i) {
    for (std::int64_t j = i + 1; j < d; ++j) {
      const std::int64_t shared = gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (shared != expected_h) {
        pair_detail = "curves " + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                      " share " + std::to_string(shared) + " points, expected " +
                      expected_h.get_str();
        break;
      }
    }
  }
  report.add(kPairCooccurrence, pair_detail.empty(), pair_detail);

  std::vector<Integer> excess(static_cast<std::size_t>(d), 0);
  for (const auto& pt : inc.points()) {
    for (std::int64_t c : pt) excess[static_cast<std::size_t>(c - 1)] += pt.size() - 1;
  }
  std::string curve_detail;
  const Integer target = expected_h * (d - 1);
  for (std::int64_t j = 0; j < d; ++j) {
    if (excess[static_cast<std::size_t>(j)] != target) {
      curve_detail = "curve " + std::to_string(j + 1) + ": sum (r_p - 1) = " +
                     excess[static_cast<std::size_t>(j)].get_str() + ", expected " +
                     target.get_str();
      break;
    }
  }
  report.add(kPerCurveIncidence, curve_detail.empty(), curve_detail);

  const Multiplicities global = multiplicities(inc);
  Multiplicities summed;
  for (const CurveStats& cs : all_curve_stats(inc)) {
    for (const auto& [k, n] : cs.t_k_j) summed[k] += n;
  }
  std::string count_detail;
  for (const auto& [k, n] : global) {
    const Integer expected = Integer(k) * n;
    const Integer got = summed.count(k) ? summed.at(k) : Integer(0);
    if (got != expected) {
      count_detail = "k = " + std::to_string(k) + ": sum_j t_k^j = " + got.get_str() +
                     ", k t_k = " + expected.get_str();
      break;
    }
  }
  if (count_detail.empty() && summed.size() != global.size()) {
    count_detail = "per-curve multiplicities not present globally";
  }
  report.add(kDoubleCounting, count_detail.empty(), count_detail);
  return report;
}

ArrangementProfile profile_of(const IncidenceStructure& inc, const RuledSurface& s,
                              const NumClass& cls) {
  const Integer h = pairwise_intersection(s, cls);
  const ValidationReport report = audit(inc, h);
  if (!report.passed()) {
    std::string message = "incidence audit failed for h = " + h.get_str() + ":";
    for (const Check& c : report.checks) {
      if (c.status != CheckStatus::Pass) message += " " + c.name + " (" + c.detail + ")";
    }
    fail(ErrorCode::AuditFailed, message);
  }
  const bool four_curve = inc.d() >= 4 && check_four_curve(inc);
  return ArrangementProfile(s, cls, inc.d(), multiplicities(inc), false, four_curve);
}

IncidenceStructure realize_generic(std::int64_t d, std::int64_t h) {
  require(d >= 2, ErrorCode::PreconditionViolated, "realize_generic needs d >= 2");
  require(h >= 1, ErrorCode::PreconditionViolated, "realize_generic needs h >= 1");
  std::vector<IncidenceStructure::CurveSet> points;
  points.reserve(static_cast<std::size_t>(d * (d - 1) / 2 * h));
  for (std::int64_t i = 1; i <= d; ++i) {
    for (std::int64_t j = i + 1; j <= d; ++j) {
      for (std::int64_t copy = 0; copy < h; ++copy) points.push_back({i, j});
    }
  }
  return IncidenceStructure(d, std::move(points));
}

bool check_four_curve(const IncidenceStructure& inc) {
  const std::int64_t d = inc.d();
  require(d >= 4, ErrorCode::PreconditionViolated, "four-curve check needs d >= 4");

  // Only points on at least four curves can cover a 4-subset; distinct
  // curve sets suffice.
  std::set<IncidenceStructure::CurveSet> big;
  for (const auto& pt : inc.points()) {
    if (pt.size() >= 4) big.insert(pt);
  }
  std::vector<CurveBits> covers;
  covers.reserve(big.size());
  for (const auto& pt : big) {
    CurveBits bits(d);
    for (std::int64_t c : pt) bits.set(c - 1);
    covers.push_back(std::move(bits));
  }

  std::array<std::int64_t, 4> q{0, 1, 2, 3};
  while (true) {
    const bool covered = std::any_of(covers.begin(), covers.end(), [&](const CurveBits& b) {
      return b.test(q[0]) && b.test(q[1]) && b.test(q[2]) && b.test(q[3]);
    });
    if (!covered) return true;
    // Next 4-subset in lexicographic order.
    int pos = 3;
    while (pos >= 0 && q[static_cast<std::size_t>(pos)] == d - 4 + pos) --pos;
    if (pos < 0) return false;
    ++q[static_cast<std::size_t>(pos)];
    for (int k = pos + 1; k < 4; ++k) {
      q[static_cast<std::size_t>(k)] = q[static_cast<std::size_t>(k - 1)] + 1;
    }
  }
}

std::size_t incidence_rank(const IncidenceStructure& inc) {
  // Identical columns do not change the rank, so each distinct curve set
  // contributes one column.
  std::set<IncidenceStructure::CurveSet> columns(inc.points().begin(), inc.points().end());
  const auto rows = static_cast<std::size_t>(inc.d());
  const std::size_t cols = columns.size();
  std::vector<std::vector<Integer>> m(rows, std::vector<Integer>(cols, 0));
  std::size_t col = 0;
  for (const auto& pt : columns) {
    for (std::int64_t c : pt) m[static_cast<std::size_t>(c - 1)][col] = 1;
    ++col;
  }

  // Fraction-free (Bareiss) elimination; pivot is the first nonzero entry
  // in the current column scanning rows top-down.
  Integer previous = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    const Integer& p = m[rank][c];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const Integer factor = m[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer v = p * m[i][j] - factor * m[rank][j];
        mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
      }
      m[i][c] = 0;
    }
    previous = p;
    ++rank;
  }
  return rank;
}

}  // namespace ruledarr
