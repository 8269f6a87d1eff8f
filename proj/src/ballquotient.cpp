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

#include "ruledarr/ballquotient.hpp"

#include <algorithm>
#include <exception>
#include <string>
#include <thread>

#include "ruledarr/covering.hpp"
#include "ruledarr/error.hpp"

namespace ruledarr {

namespace {

constexpr std::size_t kMaxDisagreementSamples = 16;

// t_k = 0 for every k outside {2, 6}.
bool only_double_and_sixfold(const Multiplicities& t) {
  return std::all_of(t.begin(), t.end(), [](const auto& kv) {
    return kv.first == 2 || kv.first == 6 || kv.second == 0;
  });
}

}  // namespace

Integer prop_exceptional(std::int64_t r_p) {
  require(r_p >= 3, ErrorCode::PreconditionViolated,
          "prop(F_p) needs r_p >= 3, got " + std::to_string(r_p));
  return Integer(pow2(static_cast<std::uint64_t>(r_p - 2)) * (r_p - 6));
}

Rational prop_strict_transform(const ArrangementProfile& p, const CurveStats& cs) {
  require_star(p);
  require(only_double_and_sixfold(p.t), ErrorCode::MultiplicityProfileNotBinary26,
          "proportionality of strict transforms needs t_k = 0 for k != 2, 6");
  require(only_double_and_sixfold(cs.t_k_j), ErrorCode::MultiplicityProfileNotBinary26,
          "curve carries a point of multiplicity other than 2 or 6");
  require(cs.t2_j <= p.t_at(2) && cs.t6_j <= p.t_at(6) && cs.t2_j >= 0 && cs.t6_j >= 0,
          ErrorCode::InconsistentCurveStats, "per-curve counts exceed global ones");
  const Integer a_prime = pairwise_intersection(p.surface, p.cls);
  const Integer b_prime = intersect(p.surface, canonical_class(p.surface), p.cls);
  return Rational(Integer(4 * a_prime + 2 * b_prime - cs.t6_j + cs.t2_j));
}

BallQuotientVerdict solve_t2_t6(const RuledSurface& s, const Integer& a, const Integer& b,
                                std::int64_t d) {
  require(d >= 4, ErrorCode::PreconditionViolated, "needs d >= 4");
  const NumClass cls{a, b};
  BallQuotientVerdict v;
  v.a_prime = pairwise_intersection(s, cls);
  v.b_prime = intersect(s, canonical_class(s), cls);
  const Integer dd(d);
  v.t2_required = make_rational(
      Integer(v.a_prime * dd * dd - 21 * v.a_prime * dd - 10 * v.b_prime * dd), Integer(12));
  v.t6_required = make_rational(
      Integer(v.a_prime * dd * dd + 3 * v.a_prime * dd + 2 * v.b_prime * dd), Integer(36));
  v.integrality_ok = is_integer(v.t2_required) && is_integer(v.t6_required);
  v.nonnegativity_ok = sgn(v.t2_required) >= 0 && sgn(v.t6_required) >= 0;
  return v;
}

BallQuotientVerdict feasibility(const RuledSurface& s, const Integer& a_in,
                                const Integer& b_in, std::int64_t d) {
  require(s.e >= 4, ErrorCode::PreconditionViolated, "feasibility needs e >= 4");
  require(a_in > 0, ErrorCode::PreconditionViolated, "feasibility needs a > 0");
  require(b_in >= a_in * s.e, ErrorCode::PreconditionViolated, "feasibility needs b >= ae");
  BallQuotientVerdict v = solve_t2_t6(s, a_in, b_in, d);

  const Rational g(s.genus), e(s.e), a(a_in), b(b_in), dq{Integer(d)};
  const Rational& t2 = v.t2_required;
  const Rational& t6 = v.t6_required;

  // H_C(2) through the general closed form, and directly with only double
  // and sixfold points.
  const ChernInputs in{g, e, a, b, dq, t2, Rational(t2 + t6), Rational(2 * t2 + 6 * t6)};
  v.hc2_value = chern_difference_normalized(in);
  const Rational direct =
      Rational(16 - 16 * g + dq * ((2 * b - a * e) * (5 * a - 2) + 4 * a * (g - 1)) + t2 -
               3 * t6);
  require(direct == v.hc2_value, ErrorCode::Internal,
          "H_C(2) disagrees with the double/sixfold specialization");
  if (v.integrality_ok && v.nonnegativity_ok && d != 6) {
    Multiplicities t;
    if (sgn(t2) > 0) t[2] = t2.get_num();
    if (sgn(t6) > 0) t[6] = t6.get_num();
    const ArrangementProfile synthesized(s, NumClass{a_in, b_in}, d, std::move(t));
    if (validate_star(synthesized).passed()) {
      require(hirzebruch_polynomial(synthesized) == v.hc2_value, ErrorCode::Internal,
              "H_C(2) of the synthesized profile disagrees");
    }
  }

  const Rational core = (3 * a - 1) * (2 * b - a * e);
  const Rational positive_part = dq * (core - 2 * a);
  const Rational genus_part = (2 * a * dq - 16) * g;
  v.reduced_rhs = positive_part + genus_part;
  const Rational unreduced = 16 - 16 * g + dq * (core + 2 * a * (g - 1));
  require(unreduced == v.reduced_rhs + 16 && unreduced == v.hc2_value, ErrorCode::Internal,
          "reduced equation is not a rearrangement of H_C(2) = 0");

  v.positivity_applies = a_in >= 2 || d >= 8;
  v.positivity_rules_out =
      v.positivity_applies && sgn(positive_part) > 0 && sgn(genus_part) >= 0;

  v.small_d_applies = a_in == 1 && d >= 4 && d <= 7;
  v.small_d_value = Rational(16 - 4 * dq + 4 * (3 * dq - dq * (dq - 1) / 10));
  if (v.small_d_applies) {
    // H_C(2) with t2 = 0 and t6 at its largest value a'd(d-1)/30 bounds every
    // admissible profile from below; the small-d value bounds that in turn.
    const Rational a_prime(v.a_prime);
    const Rational chain = Rational(16 - 16 * g + dq * (6 * b - 3 * e + 4 * g - 4) -
                                    a_prime * dq * (dq - 1) / 10);
    v.small_d_chain_ok = chain >= v.small_d_value;
    v.small_d_rules_out = v.small_d_chain_ok && sgn(v.small_d_value) > 0;
  }

  if (!v.integrality_ok) v.violated.emplace_back(violation::kIntegrality);
  if (!v.nonnegativity_ok) v.violated.emplace_back(violation::kNonnegativity);
  if (v.hc2_value != 0) v.violated.emplace_back(violation::kHC2Nonzero);
  if (v.reduced_rhs != v.reduced_lhs) v.violated.emplace_back(violation::kReducedEquation);
  if (v.positivity_rules_out) v.violated.emplace_back(violation::kPositivityArgument);
  if (v.small_d_rules_out) v.violated.emplace_back(violation::kSmallDCheck);

  v.feasible = v.integrality_ok && v.nonnegativity_ok && v.hc2_value == 0 &&
               v.reduced_rhs == v.reduced_lhs;
  return v;
}

std::int64_t ScanGrid::size() const {
  return g.size() * e.size() * a.size() * b_offset.size() * d.size();
}

namespace {

void check_grid(const ScanGrid& grid) {
  auto check = [](const IntRange& r, std::int64_t min, const char* name) {
    require(r.size() == 0 || r.lo >= min, ErrorCode::PreconditionViolated,
            std::string("scan range for ") + name + " must start at >= " + std::to_string(min));
  };
  check(grid.g, 0, "g");
  check(grid.e, 4, "e");
  check(grid.a, 1, "a");
  check(grid.b_offset, 0, "b_offset");
  check(grid.d, 4, "d");
}

ScanPoint point_at(const ScanGrid& grid, std::int64_t index) {
  ScanPoint pt{};
  pt.d = grid.d.lo + index % grid.d.size();
  index /= grid.d.size();
  const std::int64_t offset = grid.b_offset.lo + index % grid.b_offset.size();
  index /= grid.b_offset.size();
  pt.a = grid.a.lo + index % grid.a.size();
  index /= grid.a.size();
  pt.e = grid.e.lo + index % grid.e.size();
  index /= grid.e.size();
  pt.g = grid.g.lo + index;
  pt.b = pt.a * pt.e + offset;
  return pt;
}

ScanReport scan_range(const ScanGrid& grid, std::int64_t begin, std::int64_t end) {
  ScanReport report;
  for (std::int64_t i = begin; i < end; ++i) {
    const ScanPoint pt = point_at(grid, i);
    const BallQuotientVerdict v =
        feasibility(RuledSurface(Integer(pt.g), Integer(pt.e)), Integer(pt.a), Integer(pt.b),
                    pt.d);
    ++report.total;
    if (v.feasible) {
      ++report.feasible_count;
      report.witnesses.push_back(pt);
    } else {
      ++report.infeasible;
    }
    for (const std::string& name : v.violated) ++report.tallies[name];

    const bool shortcut_infeasible = v.positivity_rules_out || v.small_d_rules_out;
    const bool chain_broken = v.small_d_applies && !v.small_d_chain_ok;
    if (shortcut_infeasible == v.feasible || chain_broken) {
      ++report.shortcut_disagreements;
      if (report.disagreement_samples.size() < kMaxDisagreementSamples) {
        report.disagreement_samples.push_back(pt);
      }
    }
    if (!v.positivity_applies && !v.small_d_applies) ++report.shortcut_uncovered;
  }
  return report;
}

void merge_into(ScanReport& into, const ScanReport& part) {
  into.total += part.total;
  into.infeasible += part.infeasible;
  into.feasible_count += part.feasible_count;
  into.witnesses.insert(into.witnesses.end(), part.witnesses.begin(), part.witnesses.end());
  for (const auto& [name, n] : part.tallies) into.tallies[name] += n;
  into.shortcut_disagreements += part.shortcut_disagreements;
  into.shortcut_uncovered += part.shortcut_uncovered;
  for (const ScanPoint& pt : part.disagreement_samples) {
    if (into.disagreement_samples.size() < kMaxDisagreementSamples) {
      into.disagreement_samples.push_back(pt);
    }
  }
}

}  // namespace

ScanReport scan(const ScanGrid& grid, unsigned workers) {
  check_grid(grid);
  const std::int64_t total = grid.size();
  if (total == 0) return {};

  workers = std::max(1u, workers);
  const std::int64_t chunks = std::min<std::int64_t>(workers, total);
  std::vector<ScanReport> parts(static_cast<std::size_t>(chunks));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(chunks));
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(chunks));
  for (std::int64_t c = 0; c < chunks; ++c) {
    const std::int64_t begin = total * c / chunks;
    const std::int64_t end = total * (c + 1) / chunks;
    threads.emplace_back([&, c, begin, end] {
      try {
        parts[static_cast<std::size_t>(c)] = scan_range(grid, begin, end);
      } catch (...) {
        errors[static_cast<std::size_t>(c)] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (const auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }

  ScanReport report;
  for (const ScanReport& part : parts) merge_into(report, part);
  return report;
}

}  // namespace ruledarr
