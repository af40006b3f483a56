// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "subsep/separability.hpp"

#include <cmath>
#include <limits>

#include "subsep/errors.hpp"
#include "subsep/numeric.hpp"

namespace subsep {

namespace {

void require_exhaustible(const value_oracle& oracle, std::size_t limit) {
  if (oracle.universe_size() > limit) {
    throw budget_error(
        "ground set of size " + std::to_string(oracle.universe_size()) +
        " exceeds the exhaustive verification limit of " +
        std::to_string(limit) + "; use sampled mode instead");
  }
}

// Sum over all x in X of (v(S u {x}) - v(S)). Terms with x in S vanish.
double marginal_sum(const value_oracle& oracle, const subset& s) {
  double sum = 0.0;
  for (element_id x = 0; x < oracle.universe_size(); ++x) {
    if (!s.contains(x)) sum += oracle.marginal(s, x);
  }
  return sum;
}

// One inequality check at state S; true when the constraint is violated
// beyond tolerance.
bool violates(const value_oracle& oracle, separability_kind kind, double p,
              double singleton_total, double full, const subset& s) {
  const double lhs = marginal_sum(oracle, s);
  switch (kind) {
    case separability_kind::superseparable:
      return !tol_ge(lhs, singleton_total - p * oracle.evaluate(s));
    case separability_kind::at_least_subseparable:
      return !tol_ge(lhs, p * (full - oracle.evaluate(s)));
    case separability_kind::at_most_subseparable:
      return !tol_le(lhs, p * (full - oracle.evaluate(s)));
  }
  return false;
}

// Structure checks use the adjacent-pair characterizations: v is
// monotone iff every single-element marginal is non-negative, and
// submodular iff marginal(S, x) >= marginal(S u {y}, x) for all S and
// distinct x, y outside S. A violation on any pair A subseteq B implies
// one on an adjacent pair, so the verdict covers all pairs.
void check_structure_at(const value_oracle& oracle, const subset& s,
                        structure_report& report) {
  const std::size_t m = oracle.universe_size();
  if (report.nonneg && !tol_ge(oracle.evaluate(s), 0.0)) {
    report.nonneg = false;
    report.nonneg_witness = s;
  }
  if (report.monotone) {
    for (element_id x = 0; x < m; ++x) {
      if (s.contains(x)) continue;
      if (!tol_ge(oracle.marginal(s, x), 0.0)) {
        report.monotone = false;
        report.monotone_witness = monotonicity_witness{s, s.with(x), x};
        break;
      }
    }
  }
  if (report.submodular) {
    for (element_id y = 0; y < m && report.submodular; ++y) {
      if (s.contains(y)) continue;
      const subset larger = s.with(y);
      for (element_id x = 0; x < m; ++x) {
        if (x == y || s.contains(x)) continue;
        if (!tol_ge(oracle.marginal(s, x), oracle.marginal(larger, x))) {
          report.submodular = false;
          report.submodular_witness = submodularity_witness{s, larger, x};
          break;
        }
      }
    }
  }
}

subset random_subset(std::size_t m, rng_engine& rng) {
  subset s(m);
  for (element_id e = 0; e < m; ++e) {
    if (rng() & 1u) s.insert(e);
  }
  return s;
}

}  // namespace

std::string to_string(separability_kind kind) {
  switch (kind) {
    case separability_kind::superseparable:
      return "superseparable";
    case separability_kind::at_least_subseparable:
      return "at-least-subseparable";
    case separability_kind::at_most_subseparable:
      return "at-most-subseparable";
  }
  return "unknown";
}

std::optional<separability_kind> separability_kind_from_string(
    const std::string& name) {
  if (name == "superseparable" || name == "super") {
    return separability_kind::superseparable;
  }
  if (name == "at-least-subseparable" || name == "at-least") {
    return separability_kind::at_least_subseparable;
  }
  if (name == "at-most-subseparable" || name == "at-most") {
    return separability_kind::at_most_subseparable;
  }
  return std::nullopt;
}

structure_report check_structure(const value_oracle& oracle,
                                 std::size_t exhaustive_limit) {
  require_exhaustible(oracle, exhaustive_limit);
  const std::size_t m = oracle.universe_size();
  structure_report report;
  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    check_structure_at(oracle, subset::from_mask(m, mask), report);
    if (!report.nonneg && !report.monotone && !report.submodular) break;
  }
  return report;
}

structure_report check_structure_sampled(const value_oracle& oracle,
                                         std::size_t trials,
                                         rng_engine& rng) {
  structure_report report;
  report.exhaustive = false;
  for (std::size_t t = 0; t < trials; ++t) {
    check_structure_at(oracle, random_subset(oracle.universe_size(), rng),
                       report);
  }
  return report;
}

separability_report verify(const value_oracle& oracle, separability_kind kind,
                           double p, std::size_t exhaustive_limit) {
  if (p < 0.0) throw infeasible_error("separability parameter p must be >= 0");
  require_exhaustible(oracle, exhaustive_limit);
  const std::size_t m = oracle.universe_size();
  const double singleton_total = oracle.singleton_sum();
  const double full = oracle.full_value();
  separability_report report{kind, p, true, true, std::nullopt};
  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const subset s = subset::from_mask(m, mask);
    if (violates(oracle, kind, p, singleton_total, full, s)) {
      report.holds = false;
      report.witness = s;
      break;
    }
  }
  return report;
}

separability_report verify_sampled(const value_oracle& oracle,
                                   separability_kind kind, double p,
                                   std::size_t trials, rng_engine& rng) {
  if (p < 0.0) throw infeasible_error("separability parameter p must be >= 0");
  const double singleton_total = oracle.singleton_sum();
  const double full = oracle.full_value();
  separability_report report{kind, p, true, false, std::nullopt};
  for (std::size_t t = 0; t < trials; ++t) {
    const subset s = random_subset(oracle.universe_size(), rng);
    if (violates(oracle, kind, p, singleton_total, full, s)) {
      report.holds = false;
      report.witness = s;
      break;
    }
  }
  return report;
}

// Ratio extremization. States where the inequality's p-coefficient
// vanishes (v(S) = 0 for superseparable, v(S) = v(X) for the two
// subseparable kinds) cannot constrain p through the ratio; they are
// checked as raw inequalities instead, and a raw violation there means
// no finite p can repair it.
extremal_p_result extremal_p(const value_oracle& oracle,
                             separability_kind kind,
                             std::size_t exhaustive_limit) {
  require_exhaustible(oracle, exhaustive_limit);
  const std::size_t m = oracle.universe_size();
  const double singleton_total = oracle.singleton_sum();
  const double full = oracle.full_value();
  const std::uint64_t total = std::uint64_t{1} << m;

  const bool maximize = kind != separability_kind::at_least_subseparable;
  double extreme = maximize ? 0.0 : std::numeric_limits<double>::infinity();
  bool finite_required = true;

  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const subset s = subset::from_mask(m, mask);
    const double lhs = marginal_sum(oracle, s);
    const double vs = oracle.evaluate(s);
    if (kind == separability_kind::superseparable) {
      if (approx_equal(vs, 0.0)) {
        if (!tol_ge(lhs, singleton_total)) finite_required = false;
      } else {
        extreme = std::max(extreme, (singleton_total - lhs) / vs);
      }
      continue;
    }
    const double gap = full - vs;
    if (approx_equal(gap, 0.0)) {
      // at-most needs lhs <= p * 0; at-least holds for every p.
      if (kind == separability_kind::at_most_subseparable &&
          !tol_le(lhs, 0.0)) {
        finite_required = false;
      }
      continue;
    }
    const double ratio = lhs / gap;
    extreme = maximize ? std::max(extreme, ratio) : std::min(extreme, ratio);
  }

  if (!finite_required) return {false, std::numeric_limits<double>::infinity()};
  if (!maximize && std::isinf(extreme)) {
    // No state constrains p from above.
    return {false, std::numeric_limits<double>::infinity()};
  }
  return {true, std::max(extreme, 0.0)};
}

}  // namespace subsep
