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

#ifndef SUBSEP_SEPARABILITY_HPP
#define SUBSEP_SEPARABILITY_HPP

#include <optional>
#include <string>

#include "subsep/rng.hpp"
#include "subsep/subset.hpp"
#include "subsep/value_oracle.hpp"

namespace subsep {

// The three separability properties of a set function v, parameterized
// by p >= 0. Writing L(S) = sum over x in X of (v(S u {x}) - v(S)):
//   superseparable:          L(S) >= sum_x v({x}) - p * v(S)   for all S
//   at-least-subseparable:   L(S) >= p * (v(X) - v(S))         for all S
//   at-most-subseparable:    L(S) <= p * (v(X) - v(S))         for all S
enum class separability_kind {
  superseparable,
  at_least_subseparable,
  at_most_subseparable,
};

std::string to_string(separability_kind kind);
std::optional<separability_kind> separability_kind_from_string(
    const std::string& name);

// Exhaustive checks enumerate all 2^m subsets; above this limit the
// sampled (non-certifying) variants must be used instead.
inline constexpr std::size_t kDefaultExhaustiveLimit = 14;

struct monotonicity_witness {
  subset smaller;   // A
  subset larger;    // B = A u {x}
  element_id added; // x
};

struct submodularity_witness {
  subset smaller;   // A
  subset larger;    // B = A u {y}, y not in A
  element_id added; // x not in B with marginal(A, x) < marginal(B, x)
};

// Non-negativity, monotonicity, submodularity of an oracle, with the
// first witness per failed property. `exhaustive` is false in sampled
// mode, whose verdicts are spot checks, not certificates.
struct structure_report {
  bool nonneg = true;
  bool monotone = true;
  bool submodular = true;
  bool exhaustive = true;
  std::optional<subset> nonneg_witness;
  std::optional<monotonicity_witness> monotone_witness;
  std::optional<submodularity_witness> submodular_witness;

  bool all_hold() const { return nonneg && monotone && submodular; }
};

structure_report check_structure(
    const value_oracle& oracle,
    std::size_t exhaustive_limit = kDefaultExhaustiveLimit);

// Checks `trials` random (S, x, y) triples instead of enumerating.
structure_report check_structure_sampled(const value_oracle& oracle,
                                         std::size_t trials, rng_engine& rng);

struct separability_report {
  separability_kind kind = separability_kind::superseparable;
  double p_tested = 0.0;
  bool holds = false;
  bool exhaustive = true;
  // First subset violating the kind's inequality by more than tolerance.
  std::optional<subset> witness;
};

// Does the kind's inequality hold at parameter p for every S subseteq X?
separability_report verify(const value_oracle& oracle, separability_kind kind,
                           double p,
                           std::size_t exhaustive_limit = kDefaultExhaustiveLimit);

separability_report verify_sampled(const value_oracle& oracle,
                                   separability_kind kind, double p,
                                   std::size_t trials, rng_engine& rng);

// Tightest parameter for which the kind's inequality holds on every
// subset: the smallest such p for superseparable and at-most, the
// largest for at-least. `finite == false` means no finite p works
// (super, at-most) or every p works (at-least).
struct extremal_p_result {
  bool finite = true;
  double value = 0.0;
};

extremal_p_result extremal_p(
    const value_oracle& oracle, separability_kind kind,
    std::size_t exhaustive_limit = kDefaultExhaustiveLimit);

}  // namespace subsep

#endif  // SUBSEP_SEPARABILITY_HPP
