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

#ifndef SUBSEP_VALUE_ORACLE_HPP
#define SUBSEP_VALUE_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <memory>

#include "subsep/subset.hpp"

namespace subsep {

// Memoized evaluator for a deterministic set function v : 2^X -> R.
// Every solver in this library sees the objective only through this
// interface.
//
// The cache key is the canonical bitmask. Caching is on by default for
// universes of at most kMaxCachedUniverse elements and off above, where
// enumeration-scale memoization would not pay for itself. The evaluation
// counter counts definition invocations (cache misses), so it reports
// the true oracle cost of a solve.
//
// Oracles are immutable after construction; the cache and counter are
// internally synchronized, so concurrent readers always see identical
// values.
class value_oracle {
 public:
  using eval_fn = std::function<double(const subset&)>;

  static constexpr std::size_t kMaxCachedUniverse = 24;

  enum class cache_mode { automatic, enabled, disabled };

  value_oracle(ground_set ground, eval_fn fn,
               cache_mode mode = cache_mode::automatic);

  value_oracle(value_oracle&&) noexcept = default;
  value_oracle& operator=(value_oracle&&) noexcept = default;

  const ground_set& ground() const { return ground_; }
  std::size_t universe_size() const { return ground_.size(); }
  bool cache_enabled() const { return cache_enabled_; }

  // v(S). Throws validation_error if S belongs to a different universe.
  double evaluate(const subset& s) const;

  // v(S u {x}) - v(S). Non-negative for monotone oracles (up to noise).
  double marginal(const subset& s, element_id x) const;

  // Sum over x in X of v({x}).
  double singleton_sum() const;

  // v(X).
  double full_value() const;

  // Definition invocations so far (cache misses when caching is on).
  std::uint64_t evaluations() const;

 private:
  struct state;  // cache + counter behind a mutex

  ground_set ground_;
  eval_fn fn_;
  bool cache_enabled_;
  std::unique_ptr<state> state_;
};

}  // namespace subsep

#endif  // SUBSEP_VALUE_ORACLE_HPP
