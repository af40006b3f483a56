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

#ifndef SUBSEP_PROBLEMS_HPP
#define SUBSEP_PROBLEMS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subsep/subset.hpp"
#include "subsep/value_oracle.hpp"

namespace subsep {

// Separability parameters certified structurally by an adapter, so
// solvers get a trusted p without exhaustive checking.
struct certified_separability {
  std::optional<double> super_p;
  std::optional<double> at_most_p;
  std::optional<double> at_least_p;
};

struct problem_oracle {
  value_oracle oracle;
  certified_separability certified;
};

// Weighted coverage: ground set = the collection of sets, v(C) = total
// weight of elements covered by the union of C.
struct cover_instance {
  std::size_t n_elements = 0;
  std::vector<double> weights;                    // per element, >= 0
  std::vector<std::vector<element_id>> sets;      // element indices
  std::vector<std::string> set_labels;            // optional, per set

  std::size_t num_sets() const { return sets.size(); }
  void validate() const;

  // Number of sets containing each element.
  std::vector<std::size_t> frequencies() const;
  // Extremes over elements with positive weight (zero-weight elements
  // cannot affect v); 0 when no such element exists.
  std::size_t max_frequency() const;
  std::size_t min_frequency() const;
};

// Certifies super_p = at_most_p = max frequency, at_least_p = min frequency.
problem_oracle cover_oracle(const cover_instance& inst);

// OWA-based item selection with k-approval utilities: each agent approves
// exactly k items; an agent's value for S applies the OWA weights to its
// utilities in S sorted descending, truncated at min(K, |S|).
struct owa_instance {
  std::size_t n_agents = 0;
  std::size_t m_items = 0;
  std::size_t k = 0;                              // approvals per agent
  std::vector<std::vector<element_id>> approvals; // item indices, size k each
  std::vector<double> owa;                        // non-negative, non-increasing

  void validate() const;
};

std::vector<double> owa_chamberlin_courant(std::size_t committee_size);
std::vector<double> owa_pav(std::size_t committee_size);

// Certifies super_p = at_most_p = k. Requires owa length >= committee_size.
problem_oracle owa_oracle(const owa_instance& inst, std::size_t committee_size);

// Capacitated bipartite matching: selecting S from the X side makes its
// edges available; v(S) is the best total weight with each x in S used
// at most c(x) times and each y at most once.
struct bmatching_edge {
  std::size_t x = 0;
  std::size_t y = 0;
  double weight = 0.0;
};

struct bmatching_instance {
  std::size_t nx = 0;
  std::size_t ny = 0;
  std::vector<bmatching_edge> edges;
  std::vector<std::int64_t> capacities;           // per X vertex, >= 1

  void validate() const;
  std::size_t y_degree_bound() const;
};

// Exact optimum of the capacitated assignment for the X vertices in s,
// by successive most-profitable augmenting paths.
double max_weight_b_matching(const bmatching_instance& inst, const subset& s);

// Certifies super_p = the Y-side degree bound.
problem_oracle bmatching_oracle(const bmatching_instance& inst);

}  // namespace subsep

#endif  // SUBSEP_PROBLEMS_HPP
