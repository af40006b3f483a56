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

#include "subsep/subset.hpp"

#include <bit>

#include "subsep/errors.hpp"

namespace subsep {

namespace {
std::size_t word_count(std::size_t universe_size) {
  return (universe_size + 63) / 64;
}
}  // namespace

subset::subset(std::size_t universe_size)
    : universe_size_(universe_size), words_(word_count(universe_size), 0) {}

subset subset::full(std::size_t universe_size) {
  subset s(universe_size);
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
  const std::size_t tail = universe_size & 63;
  if (tail != 0 && !s.words_.empty()) {
    s.words_.back() = (~std::uint64_t{0}) >> (64 - tail);
  }
  return s;
}

subset subset::of(std::size_t universe_size,
                  std::initializer_list<element_id> elements) {
  subset s(universe_size);
  for (element_id e : elements) {
    if (e >= universe_size) {
      throw validation_error("subset element " + std::to_string(e) +
                             " out of range for universe of size " +
                             std::to_string(universe_size));
    }
    s.insert(e);
  }
  return s;
}

subset subset::of(std::size_t universe_size,
                  const std::vector<element_id>& elements) {
  subset s(universe_size);
  for (element_id e : elements) {
    if (e >= universe_size) {
      throw validation_error("subset element " + std::to_string(e) +
                             " out of range for universe of size " +
                             std::to_string(universe_size));
    }
    s.insert(e);
  }
  return s;
}

subset subset::from_mask(std::size_t universe_size, std::uint64_t bits) {
  if (universe_size > 64) {
    throw validation_error("from_mask supports universes of at most 64 elements");
  }
  subset s(universe_size);
  const std::uint64_t valid =
      universe_size == 64 ? ~std::uint64_t{0}
                          : ((std::uint64_t{1} << universe_size) - 1);
  if ((bits & ~valid) != 0) {
    throw validation_error("mask references elements outside the universe");
  }
  if (!s.words_.empty()) s.words_[0] = bits;
  return s;
}

subset subset::with(element_id e) const {
  subset s = *this;
  s.insert(e);
  return s;
}

subset subset::without(element_id e) const {
  subset s = *this;
  s.erase(e);
  return s;
}

std::size_t subset::count() const {
  std::size_t c = 0;
  for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool subset::none() const {
  for (std::uint64_t w : words_) {
    if (w != 0) return false;
  }
  return true;
}

bool subset::is_subset_of(const subset& other) const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

std::size_t subset::intersect_count(const subset& other) const {
  std::size_t c = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    c += static_cast<std::size_t>(std::popcount(words_[w] & other.words_[w]));
  }
  return c;
}

subset subset::unite(const subset& other) const {
  subset s = *this;
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] |= other.words_[w];
  return s;
}

std::vector<element_id> subset::elements() const {
  std::vector<element_id> out;
  out.reserve(count());
  for_each([&](element_id e) { out.push_back(e); });
  return out;
}

bool subset::mask_less(const subset& a, const subset& b) {
  for (std::size_t w = a.words_.size(); w-- > 0;) {
    if (a.words_[w] != b.words_[w]) return a.words_[w] < b.words_[w];
  }
  return false;
}

std::string subset::to_string() const {
  std::string out = "{";
  bool first = true;
  for_each([&](element_id e) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  });
  out += "}";
  return out;
}

std::size_t subset_hash::operator()(const subset& s) const {
  std::uint64_t h = 0x9E3779B97F4A7C15ULL ^ s.universe_size();
  for (std::uint64_t w : s.words()) {
    h ^= w + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

ground_set::ground_set(std::size_t size, std::vector<std::string> labels)
    : size_(size), labels_(std::move(labels)) {
  if (size_ < 1) throw validation_error("ground set must have at least one element");
  if (!labels_.empty() && labels_.size() != size_) {
    throw validation_error("ground set labels must match its size");
  }
}

}  // namespace subsep
