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

#include "subsep/value_oracle.hpp"

#include <mutex>
#include <unordered_map>
#include <utility>

#include "subsep/errors.hpp"

namespace subsep {

struct value_oracle::state {
  mutable std::mutex mu;
  mutable std::unordered_map<subset, double, subset_hash> cache;
  mutable std::uint64_t evaluations = 0;
};

value_oracle::value_oracle(ground_set ground, eval_fn fn, cache_mode mode)
    : ground_(std::move(ground)),
      fn_(std::move(fn)),
      cache_enabled_(mode == cache_mode::automatic
                         ? ground_.size() <= kMaxCachedUniverse
                         : mode == cache_mode::enabled),
      state_(std::make_unique<state>()) {
  if (!fn_) throw validation_error("value oracle requires an evaluation function");
}

double value_oracle::evaluate(const subset& s) const {
  if (s.universe_size() != ground_.size()) {
    throw validation_error("subset universe of size " +
                           std::to_string(s.universe_size()) +
                           " does not match oracle ground set of size " +
                           std::to_string(ground_.size()));
  }
  if (!cache_enabled_) {
    {
      std::lock_guard<std::mutex> lock(state_->mu);
      ++state_->evaluations;
    }
    return fn_(s);
  }
  {
    std::lock_guard<std::mutex> lock(state_->mu);
    auto it = state_->cache.find(s);
    if (it != state_->cache.end()) return it->second;
  }
  const double value = fn_(s);
  std::lock_guard<std::mutex> lock(state_->mu);
  auto [it, inserted] = state_->cache.emplace(s, value);
  if (inserted) ++state_->evaluations;
  return it->second;
}

double value_oracle::marginal(const subset& s, element_id x) const {
  if (x >= ground_.size()) {
    throw validation_error("element " + std::to_string(x) +
                           " out of range for ground set of size " +
                           std::to_string(ground_.size()));
  }
  if (s.contains(x)) return 0.0;
  return evaluate(s.with(x)) - evaluate(s);
}

double value_oracle::singleton_sum() const {
  double sum = 0.0;
  for (element_id x = 0; x < ground_.size(); ++x) {
    sum += evaluate(subset::of(ground_.size(), {x}));
  }
  return sum;
}

double value_oracle::full_value() const {
  return evaluate(ground_.full_subset());
}

std::uint64_t value_oracle::evaluations() const {
  std::lock_guard<std::mutex> lock(state_->mu);
  return state_->evaluations;
}

}  // namespace subsep
