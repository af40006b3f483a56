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

#ifndef SUBSEP_SOLVERS_HPP
#define SUBSEP_SOLVERS_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "subsep/rng.hpp"
#include "subsep/subset.hpp"
#include "subsep/value_oracle.hpp"

namespace subsep {

enum class solve_mode { max, min, min_or_max, exact };

std::string to_string(solve_mode mode);

// Outcome of one solver call. `value` is evaluate(chosen) bit-exact and
// `residual` is v(X) - value. `guarantee` is the ratio certified by the
// theorem backing the solver, when one applies. `evaluations` counts the
// oracle-definition invocations spent by this call.
struct solve_result {
  subset chosen;
  double value = 0.0;
  double residual = 0.0;
  solve_mode mode = solve_mode::max;
  std::optional<double> guarantee;
  std::uint64_t evaluations = 0;
  std::optional<std::uint64_t> seed;
  std::uint64_t runs = 1;
  // False only when an exact search exhausted its K budget; the result
  // then carries the best subset seen and its residual.
  bool found = true;
};

// Shared parameter bundle for the approximation schemes.
//   beta: required ratio; beta < 1 for the maximization scheme, beta > 1
//         for the minimization and min-or-max schemes.
//   epsilon: allowed failure probability of a randomized scheme.
//   p: separability parameter, supplied by the caller or an adapter;
//      solvers trust it (the separability module certifies it at small m).
struct scheme_params {
  std::size_t k = 1;
  double beta = 0.5;
  double epsilon = 0.05;
  double p = 1.0;
};

struct solver_budgets {
  std::uint64_t max_enumeration = 2'000'000;
  std::uint64_t max_runs = 10'000'000;
};

// Exact maximizer over all subsets of size <= k, ties broken by the
// numerically smallest bitmask. The test oracle for everything else.
solve_result brute_force(const value_oracle& oracle, std::size_t k,
                         const solver_budgets& budgets = {});

// Preselect-and-enumerate scheme for p-superseparable functions: keep
// the ceil(p*k/(1-beta) + k) elements with the largest singleton values,
// then exhaust all k-subsets of that pool. Certifies ratio beta.
solve_result preselect_enumerate(const value_oracle& oracle,
                                 const scheme_params& params,
                                 const solver_budgets& budgets = {});

// Pool size used by preselect_enumerate, exposed for cost estimation.
std::uint64_t preselect_pool_size(double p, std::size_t k, double beta);

// Optional certificate strengthening the greedy guarantee: at_least_p
// yields ratio 1 - exp(-p*k/m); a submodular objective additionally
// yields the classic 1 - 1/e, and both together their maximum.
struct greedy_certificate {
  std::optional<double> at_least_p;
  bool submodular = false;
};

// K rounds of best-marginal selection, ties to the lowest index.
solve_result greedy(const value_oracle& oracle, std::size_t k,
                    const greedy_certificate& cert = {});

// PTAS for at-least-(gamma*m)-subseparable functions: brute force up to
// the threshold ceil(ln(1/eps_ratio)/gamma), greedy beyond it.
solve_result ptas(const value_oracle& oracle, std::size_t k, double gamma,
                  double epsilon_ratio, const solver_budgets& budgets = {});

std::uint64_t ptas_threshold(double gamma, double epsilon_ratio);

// One randomized pass: k selection steps, each drawing the next element
// with probability proportional to its marginal gain. When every
// marginal is zero the partial solution is already value-complete and is
// padded to size k with uniformly random unused elements.
subset single_run(const value_oracle& oracle, std::size_t k, rng_engine& rng);

// Restart count ceil(-ln(eps) * (p*beta/(beta-1))^k) for the randomized
// minimization scheme.
std::uint64_t randomized_min_run_count(const scheme_params& params);

// Randomized restart scheme for at-most-p-subseparable functions: the
// best of R independent single runs achieves residual <= beta * optimal
// residual with probability >= 1 - epsilon.
solve_result randomized_min(const value_oracle& oracle,
                            const scheme_params& params,
                            std::uint64_t master_seed,
                            const solver_budgets& budgets = {});

// Parameter the min-or-max reduction feeds to the restart scheme:
// (beta/(beta-1)) * singleton_sum / v(X).
double min_or_max_parameter(const value_oracle& oracle, double beta);

// Min-or-max scheme: with probability >= 1 - epsilon the result is within
// ratio beta of optimal in at least one of the two metrics. Degenerate
// instances with v(X) = 0 return the empty set directly.
solve_result min_or_max(const value_oracle& oracle, std::size_t k, double beta,
                        double epsilon, std::uint64_t master_seed,
                        const solver_budgets& budgets = {});

// Exact randomized search for the smallest S with v(S) = v(X): runs the
// restart scheme at K = 1, 2, ... with ceil(-ln(eps) * p^K) runs per
// level until a level succeeds or k_max is exhausted.
solve_result best_subset_exact(const value_oracle& oracle, double p,
                               double epsilon, std::uint64_t master_seed,
                               std::size_t k_max,
                               const solver_budgets& budgets = {});

}  // namespace subsep

#endif  // SUBSEP_SOLVERS_HPP
