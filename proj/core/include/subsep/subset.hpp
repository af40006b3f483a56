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

#ifndef SUBSEP_SUBSET_HPP
#define SUBSEP_SUBSET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace subsep {

using element_id = std::size_t;

// Subset of a fixed universe {0, ..., n-1}, stored as a bitmask.
class subset {
 public:
  subset() = default;
  explicit subset(std::size_t universe_size);

  static subset empty(std::size_t universe_size) { return subset(universe_size); }
  static subset full(std::size_t universe_size);
  static subset of(std::size_t universe_size,
                   std::initializer_list<element_id> elements);
  static subset of(std::size_t universe_size,
                   const std::vector<element_id>& elements);
  // Low 64 bits given directly; requires universe_size <= 64.
  static subset from_mask(std::size_t universe_size, std::uint64_t bits);

  std::size_t universe_size() const { return universe_size_; }

  bool contains(element_id e) const {
    return (words_[e >> 6] >> (e & 63)) & 1u;
  }
  void insert(element_id e) { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  void erase(element_id e) { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }
  subset with(element_id e) const;
  subset without(element_id e) const;

  std::size_t count() const;
  bool none() const;
  bool is_subset_of(const subset& other) const;
  std::size_t intersect_count(const subset& other) const;

  subset unite(const subset& other) const;

  std::vector<element_id> elements() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        fn(static_cast<element_id>((w << 6) + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const subset& a, const subset& b) = default;

  // Numeric comparison of the bitmask, least-significant element first.
  // The canonical tie-break order for solvers.
  static bool mask_less(const subset& a, const subset& b);

  std::string to_string() const;

 private:
  std::size_t universe_size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct subset_hash {
  std::size_t operator()(const subset& s) const;
};

// Indexed universe a set function is defined over. Element indices are
// dense in 0..size-1; labels, when present, name each index.
class ground_set {
 public:
  explicit ground_set(std::size_t size, std::vector<std::string> labels = {});

  std::size_t size() const { return size_; }
  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(element_id e) const { return labels_[e]; }

  subset empty_subset() const { return subset::empty(size_); }
  subset full_subset() const { return subset::full(size_); }

 private:
  std::size_t size_;
  std::vector<std::string> labels_;
};

}  // namespace subsep

#endif  // SUBSEP_SUBSET_HPP
