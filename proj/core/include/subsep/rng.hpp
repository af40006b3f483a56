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

#ifndef SUBSEP_RNG_HPP
#define SUBSEP_RNG_HPP

#include <cstdint>
#include <random>

namespace subsep {

// All randomness flows through std::mt19937_64, whose output sequence is
// fully specified by the standard, seeded through SplitMix64 so that
// per-run streams can be derived independently from a master seed.
// Uniform draws are implemented here by hand; std::uniform_*_distribution
// is implementation-defined and would break cross-platform reproducibility.
using rng_engine = std::mt19937_64;

// SplitMix64 finalizer (Steele, Lea, Flood 2014).
inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Stream seed for run `run_index` under `master_seed`. Streams are
// independent of execution order, so restart runs are reorderable and
// parallelizable without changing any result.
inline std::uint64_t stream_seed(std::uint64_t master_seed,
                                 std::uint64_t run_index) {
  return splitmix64(splitmix64(master_seed) ^ splitmix64(run_index + 1));
}

inline rng_engine make_run_stream(std::uint64_t master_seed,
                                  std::uint64_t run_index) {
  return rng_engine(stream_seed(master_seed, run_index));
}

// Uniform double in [0, 1), 53 mantissa bits.
inline double uniform01(rng_engine& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n), unbiased via rejection.
inline std::uint64_t uniform_index(rng_engine& rng, std::uint64_t n) {
  // threshold = 2^64 mod n; values below it would bias the modulus.
  const std::uint64_t threshold = (0ULL - n) % n;
  for (;;) {
    const std::uint64_t x = rng();
    if (x >= threshold) return x % n;
  }
}

}  // namespace subsep

#endif  // SUBSEP_RNG_HPP
