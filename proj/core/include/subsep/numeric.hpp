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

#ifndef SUBSEP_NUMERIC_HPP
#define SUBSEP_NUMERIC_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace subsep {

// Value comparisons across the library: relative 1e-9 with absolute
// floor 1e-12. Set-function values are sums of input weights, so exact
// integer arithmetic is never assumed.
inline constexpr double kRelTol = 1e-9;
inline constexpr double kAbsTol = 1e-12;

inline bool approx_equal(double a, double b) {
  const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
  return std::fabs(a - b) <= std::max(kAbsTol, kRelTol * scale);
}

// Inequality slack for constraint checking: a constraint counts as
// violated only if broken by more than kRelTol * max(1, scale of terms).
inline double violation_slack(double lhs, double rhs) {
  return kRelTol * std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
}

// lhs >= rhs up to tolerance.
inline bool tol_ge(double lhs, double rhs) {
  return lhs >= rhs - violation_slack(lhs, rhs);
}

// lhs <= rhs up to tolerance.
inline bool tol_le(double lhs, double rhs) {
  return lhs <= rhs + violation_slack(lhs, rhs);
}

// Ceiling on 64-bit floats with a relative guard so that values sitting
// one rounding error above an exact integer do not get bumped up a step.
inline std::uint64_t ceil_count(double x) {
  if (!(x > 0.0)) return 0;
  const double guarded = x - kRelTol * std::max(1.0, std::fabs(x));
  const double c = std::ceil(guarded);
  if (c >= 18446744073709549568.0) return UINT64_MAX;  // 2^64 ulp-safe clamp
  return static_cast<std::uint64_t>(c);
}

}  // namespace subsep

#endif  // SUBSEP_NUMERIC_HPP
