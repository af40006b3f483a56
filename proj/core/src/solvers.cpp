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

#include "subsep/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "subsep/errors.hpp"
#include "subsep/numeric.hpp"

namespace subsep {

namespace {

void require_k_at_most_m(std::size_t k, std::size_t m) {
  if (k > m) {
    throw infeasible_error("solution size K=" + std::to_string(k) +
                           " exceeds the ground set size m=" +
                           std::to_string(m));
  }
}

// Saturation point for subset counting; high enough that any saturated
// count is far beyond every realistic budget.
constexpr std::uint64_t kCountCap = 1'000'000'000'000ULL;

// C(n, k) saturated at kCountCap + 1. Intermediate products stay below
// (kCountCap + 1) * k, which both uint64 and double hold exactly.
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const double next = static_cast<double>(result) *
                        static_cast<double>(n - k + i) /
                        static_cast<double>(i);
    if (next > static_cast<double>(kCountCap) + 1.0) return kCountCap + 1;
    // result * (n - k + i) / i is integral at every step.
    result = result * (n - k + i) / i;
  }
  return result;
}

std::string count_string(std::uint64_t count) {
  return count > kCountCap ? "more than 10^12" : std::to_string(count);
}

struct best_tracker {
  bool has = false;
  double value = 0.0;
  subset chosen;

  void offer(const subset& s, double v) {
    if (!has || v > value || (v == value && subset::mask_less(s, chosen))) {
      has = true;
      value = v;
      chosen = s;
    }
  }
};

// Visits every size-k subset of pool (ids ascending within each set).
template <typename Fn>
void for_each_combination(const std::vector<element_id>& pool, std::size_t k,
                          std::size_t universe, Fn&& fn) {
  if (k > pool.size()) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    subset s(universe);
    for (std::size_t i : idx) s.insert(pool[i]);
    fn(s);
    // advance
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (idx[i] != i + pool.size() - k) break;
      if (i == 0) return;
    }
    if (k == 0) return;
    if (idx[i] == i + pool.size() - k) return;
    ++idx[i];
    for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

solve_result finish(const value_oracle& oracle, best_tracker best,
                    solve_mode mode, std::optional<double> guarantee,
                    std::uint64_t evals_before) {
  solve_result result;
  result.chosen = best.chosen;
  result.value = best.value;
  result.residual = oracle.full_value() - best.value;
  result.mode = mode;
  result.guarantee = guarantee;
  result.evaluations = oracle.evaluations() - evals_before;
  return result;
}

}  // namespace

std::string to_string(solve_mode mode) {
  switch (mode) {
    case solve_mode::max:
      return "max";
    case solve_mode::min:
      return "min";
    case solve_mode::min_or_max:
      return "min-or-max";
    case solve_mode::exact:
      return "exact";
  }
  return "unknown";
}

solve_result brute_force(const value_oracle& oracle, std::size_t k,
                         const solver_budgets& budgets) {
  const std::size_t m = oracle.universe_size();
  const std::size_t k_eff = std::min(k, m);
  const std::uint64_t evals_before = oracle.evaluations();

  std::uint64_t total = 0;
  for (std::size_t j = 0; j <= k_eff; ++j) {
    total = std::min(total + binomial_capped(m, j), kCountCap + 1);
  }
  if (total > budgets.max_enumeration) {
    throw budget_error("brute force over subsets of size <= " +
                       std::to_string(k_eff) + " of " + std::to_string(m) +
                       " elements needs " + count_string(total) +
                       " evaluations, more than the enumeration budget of " +
                       std::to_string(budgets.max_enumeration));
  }

  std::vector<element_id> all(m);
  std::iota(all.begin(), all.end(), element_id{0});
  best_tracker best;
  for (std::size_t j = 0; j <= k_eff; ++j) {
    for_each_combination(all, j, m,
                         [&](const subset& s) { best.offer(s, oracle.evaluate(s)); });
  }
  return finish(oracle, best, solve_mode::max, 1.0, evals_before);
}

std::uint64_t preselect_pool_size(double p, std::size_t k, double beta) {
  return ceil_count(p * static_cast<double>(k) / (1.0 - beta) +
                    static_cast<double>(k));
}

solve_result preselect_enumerate(const value_oracle& oracle,
                                 const scheme_params& params,
                                 const solver_budgets& budgets) {
  const std::size_t m = oracle.universe_size();
  const std::size_t k = params.k;
  if (k < 1) throw infeasible_error("K must be at least 1");
  require_k_at_most_m(k, m);
  if (!(params.beta >= 0.0 && params.beta < 1.0)) {
    throw infeasible_error("maximization scheme requires 0 <= beta < 1");
  }
  if (!(params.p > 0.0)) throw infeasible_error("requires p > 0");
  const std::uint64_t evals_before = oracle.evaluations();

  // Pool: the elements with the largest singleton values, lowest index
  // first among equals.
  std::vector<element_id> order(m);
  std::iota(order.begin(), order.end(), element_id{0});
  std::vector<double> singleton(m);
  for (element_id x = 0; x < m; ++x) {
    singleton[x] = oracle.evaluate(subset::of(m, {x}));
  }
  std::stable_sort(order.begin(), order.end(), [&](element_id a, element_id b) {
    return singleton[a] > singleton[b];
  });
  const std::uint64_t want = preselect_pool_size(params.p, k, params.beta);
  const std::size_t pool_size =
      static_cast<std::size_t>(std::min<std::uint64_t>(want, m));
  std::vector<element_id> pool(order.begin(),
                               order.begin() + static_cast<std::ptrdiff_t>(pool_size));
  std::sort(pool.begin(), pool.end());

  const std::uint64_t combos = binomial_capped(pool_size, k);
  if (combos > budgets.max_enumeration) {
    throw budget_error(
        "preselect pool of " + std::to_string(pool_size) + " elements needs C(" +
        std::to_string(pool_size) + "," + std::to_string(k) + ") = " +
        count_string(combos) + " enumerations, more than the budget of " +
        std::to_string(budgets.max_enumeration));
  }

  best_tracker best;
  for_each_combination(pool, k, m,
                       [&](const subset& s) { best.offer(s, oracle.evaluate(s)); });
  return finish(oracle, best, solve_mode::max, params.beta, evals_before);
}

solve_result greedy(const value_oracle& oracle, std::size_t k,
                    const greedy_certificate& cert) {
  const std::size_t m = oracle.universe_size();
  require_k_at_most_m(k, m);
  const std::uint64_t evals_before = oracle.evaluations();

  subset s(m);
  for (std::size_t step = 0; step < k; ++step) {
    bool have = false;
    double best_gain = 0.0;
    element_id best_x = 0;
    for (element_id x = 0; x < m; ++x) {
      if (s.contains(x)) continue;
      const double gain = oracle.marginal(s, x);
      if (!have || gain > best_gain) {
        have = true;
        best_gain = gain;
        best_x = x;
      }
    }
    s.insert(best_x);
  }

  std::optional<double> guarantee;
  if (cert.at_least_p) {
    const double thm_ratio =
        1.0 - std::exp(-(*cert.at_least_p) * static_cast<double>(k) /
                       static_cast<double>(m));
    guarantee = cert.submodular ? std::max(1.0 - std::exp(-1.0), thm_ratio)
                                : thm_ratio;
  } else if (cert.submodular) {
    guarantee = 1.0 - std::exp(-1.0);
  }

  best_tracker best;
  best.offer(s, oracle.evaluate(s));
  return finish(oracle, best, solve_mode::max, guarantee, evals_before);
}

std::uint64_t ptas_threshold(double gamma, double epsilon_ratio) {
  return ceil_count(-std::log(epsilon_ratio) / gamma);
}

solve_result ptas(const value_oracle& oracle, std::size_t k, double gamma,
                  double epsilon_ratio, const solver_budgets& budgets) {
  if (!(gamma > 0.0)) throw infeasible_error("requires gamma > 0");
  if (!(epsilon_ratio > 0.0 && epsilon_ratio < 1.0)) {
    throw infeasible_error("requires 0 < epsilon_ratio < 1");
  }
  require_k_at_most_m(k, oracle.universe_size());
  const std::uint64_t threshold = ptas_threshold(gamma, epsilon_ratio);
  solve_result result;
  if (k <= threshold) {
    result = brute_force(oracle, k, budgets);
  } else {
    const double p = gamma * static_cast<double>(oracle.universe_size());
    result = greedy(oracle, k, greedy_certificate{p, false});
  }
  result.guarantee = 1.0 - epsilon_ratio;
  return result;
}

subset single_run(const value_oracle& oracle, std::size_t k, rng_engine& rng) {
  const std::size_t m = oracle.universe_size();
  require_k_at_most_m(k, m);

  subset s(m);
  std::vector<element_id> candidates;
  std::vector<double> weight;
  for (std::size_t step = 0; step < k; ++step) {
    candidates.clear();
    weight.clear();
    const double base = oracle.evaluate(s);
    const double zero_tol = kAbsTol * std::max(1.0, std::fabs(base));
    double total = 0.0;
    for (element_id x = 0; x < m; ++x) {
      if (s.contains(x)) continue;
      const double gain = std::max(oracle.marginal(s, x), 0.0);
      candidates.push_back(x);
      weight.push_back(gain);
      total += gain;
    }
    bool all_zero = true;
    for (double w : weight) {
      if (w > zero_tol) {
        all_zero = false;
        break;
      }
    }
    if (all_zero) {
      // Value-complete: no element can add anything, so pad uniformly at
      // random up to size k and stop.
      std::vector<element_id> unused = candidates;
      while (s.count() < k && !unused.empty()) {
        const std::size_t pick = static_cast<std::size_t>(
            uniform_index(rng, unused.size()));
        s.insert(unused[pick]);
        unused.erase(unused.begin() + static_cast<std::ptrdiff_t>(pick));
      }
      return s;
    }
    const double u = uniform01(rng) * total;
    double cum = 0.0;
    element_id chosen = candidates.back();
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      cum += weight[i];
      if (u < cum) {
        chosen = candidates[i];
        break;
      }
    }
    s.insert(chosen);
  }
  return s;
}

std::uint64_t randomized_min_run_count(const scheme_params& params) {
  const double per_run =
      std::pow(params.p * params.beta / (params.beta - 1.0),
               static_cast<double>(params.k));
  return std::max<std::uint64_t>(
      1, ceil_count(-std::log(params.epsilon) * per_run));
}

namespace {

void validate_randomized(const scheme_params& params, std::size_t m) {
  if (params.k < 1) throw infeasible_error("K must be at least 1");
  require_k_at_most_m(params.k, m);
  if (!(params.beta > 1.0)) {
    throw infeasible_error("minimization scheme requires beta > 1");
  }
  if (!(params.epsilon > 0.0 && params.epsilon < 1.0)) {
    throw infeasible_error("requires 0 < epsilon < 1");
  }
  if (!(params.p > 0.0)) throw infeasible_error("requires p > 0");
}

}  // namespace

solve_result randomized_min(const value_oracle& oracle,
                            const scheme_params& params,
                            std::uint64_t master_seed,
                            const solver_budgets& budgets) {
  validate_randomized(params, oracle.universe_size());
  const std::uint64_t evals_before = oracle.evaluations();
  const std::uint64_t run_count = randomized_min_run_count(params);
  if (run_count > budgets.max_runs) {
    throw budget_error("randomized minimization needs " +
                       std::to_string(run_count) +
                       " restart runs, more than the run budget of " +
                       std::to_string(budgets.max_runs));
  }

  best_tracker best;
  for (std::uint64_t r = 0; r < run_count; ++r) {
    rng_engine rng = make_run_stream(master_seed, r);
    const subset s = single_run(oracle, params.k, rng);
    const double v = oracle.evaluate(s);
    // Strict improvement keeps the lowest run index among ties, so the
    // reduction is independent of run order.
    if (!best.has || v > best.value) {
      best.has = true;
      best.value = v;
      best.chosen = s;
    }
  }

  solve_result result =
      finish(oracle, best, solve_mode::min, params.beta, evals_before);
  result.seed = master_seed;
  result.runs = run_count;
  return result;
}

double min_or_max_parameter(const value_oracle& oracle, double beta) {
  if (!(beta > 1.0)) throw infeasible_error("min-or-max requires beta > 1");
  return beta / (beta - 1.0) * oracle.singleton_sum() / oracle.full_value();
}

solve_result min_or_max(const value_oracle& oracle, std::size_t k, double beta,
                        double epsilon, std::uint64_t master_seed,
                        const solver_budgets& budgets) {
  if (!(beta > 1.0)) throw infeasible_error("min-or-max requires beta > 1");
  const std::uint64_t evals_before = oracle.evaluations();
  const double full = oracle.full_value();
  if (approx_equal(full, 0.0)) {
    // Degenerate instance: any set is optimal in both metrics.
    solve_result result;
    result.chosen = subset::empty(oracle.universe_size());
    result.value = oracle.evaluate(result.chosen);
    result.residual = full - result.value;
    result.mode = solve_mode::min_or_max;
    result.guarantee = beta;
    result.evaluations = oracle.evaluations() - evals_before;
    result.seed = master_seed;
    result.runs = 0;
    return result;
  }
  scheme_params params;
  params.k = k;
  params.beta = beta;
  params.epsilon = epsilon;
  params.p = min_or_max_parameter(oracle, beta);
  solve_result result = randomized_min(oracle, params, master_seed, budgets);
  result.mode = solve_mode::min_or_max;
  result.evaluations = oracle.evaluations() - evals_before;
  return result;
}

solve_result best_subset_exact(const value_oracle& oracle, double p,
                               double epsilon, std::uint64_t master_seed,
                               std::size_t k_max,
                               const solver_budgets& budgets) {
  if (!(p > 0.0)) throw infeasible_error("requires p > 0");
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw infeasible_error("requires 0 < epsilon < 1");
  }
  if (k_max < 1) throw infeasible_error("K_max must be at least 1");
  require_k_at_most_m(k_max, oracle.universe_size());

  const std::uint64_t evals_before = oracle.evaluations();
  const double full = oracle.full_value();
  best_tracker best;
  std::uint64_t runs_done = 0;

  for (std::size_t k = 1; k <= k_max; ++k) {
    const std::uint64_t level_runs = std::max<std::uint64_t>(
        1, ceil_count(-std::log(epsilon) * std::pow(p, static_cast<double>(k))));
    if (runs_done + level_runs > budgets.max_runs) {
      throw budget_error("exact search needs " +
                         std::to_string(runs_done + level_runs) +
                         " restart runs, more than the run budget of " +
                         std::to_string(budgets.max_runs));
    }
    for (std::uint64_t r = 0; r < level_runs; ++r) {
      rng_engine rng = make_run_stream(master_seed, runs_done);
      ++runs_done;
      const subset s = single_run(oracle, k, rng);
      const double v = oracle.evaluate(s);
      if (!best.has || v > best.value) {
        best.has = true;
        best.value = v;
        best.chosen = s;
      }
      if (approx_equal(v, full)) {
        solve_result result =
            finish(oracle, best_tracker{true, v, s}, solve_mode::exact, 1.0,
                   evals_before);
        result.seed = master_seed;
        result.runs = runs_done;
        return result;
      }
    }
  }

  solve_result result =
      finish(oracle, best, solve_mode::exact, std::nullopt, evals_before);
  result.seed = master_seed;
  result.runs = runs_done;
  result.found = false;
  return result;
}

}  // namespace subsep
