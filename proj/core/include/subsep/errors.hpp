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

#ifndef SUBSEP_ERRORS_HPP
#define SUBSEP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace subsep {

// Malformed input: bad subset/universe, broken instance invariants,
// unparseable files. CLI exit code 2.
class validation_error : public std::runtime_error {
 public:
  explicit validation_error(const std::string& what)
      : std::runtime_error(what) {}
};

// Work limit exceeded: enumeration budget, restart-run budget, or the
// exhaustive-verification subset limit. CLI exit code 3.
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// Parameters outside their admissible range (beta, epsilon, K vs m,
// unachievable generator structure). CLI exit code 4.
class infeasible_error : public std::runtime_error {
 public:
  explicit infeasible_error(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace subsep

#endif  // SUBSEP_ERRORS_HPP
