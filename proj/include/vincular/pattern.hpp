// Copyright 2026 The Vincular Authors
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

#ifndef VINCULAR_PATTERN_HPP_
#define VINCULAR_PATTERN_HPP_

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vincular/permutation.hpp"

namespace vincular {

// A generalized (vincular) pattern: a permutation of 1..k split into
// dash-separated blocks. Letters inside a block must land on adjacent
// positions of the host permutation.
class VincularPattern {
 public:
  static constexpr std::size_t kMaxLength = 9;

  // `block_sizes` must be positive and sum to letters.size().
  VincularPattern(std::vector<int> letters, std::vector<int> block_sizes);

  std::size_t size() const { return letters_.size(); }
  std::span<const int> letters() const { return letters_; }
  // The type (t_1, ..., t_{h+1}): block sizes from left to right.
  std::span<const int> type() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }
  // True if letter i and letter i+1 share a block.
  bool joined_to_next(std::size_t i) const;

  const std::string& to_string() const { return text_; }

  friend bool operator==(const VincularPattern& a, const VincularPattern& b) {
    return a.text_ == b.text_;
  }
  // Ordered by text, which is what the canonical set ordering relies on.
  friend std::strong_ordering operator<=>(const VincularPattern& a,
                                          const VincularPattern& b) {
    return a.text_ <=> b.text_;
  }

 private:
  std::vector<int> letters_;
  std::vector<int> blocks_;
  std::string text_;
};

// "216-4-53" -> letters 216453, type (3,1,2). Errors carry the offending
// offset.
VincularPattern parse_pattern(std::string_view text);

// 1-based position tuple of an occurrence.
using Occurrence = std::vector<std::size_t>;

// Containment on any word of distinct integers; only relative order matters.
bool contains(std::span<const int> word, const VincularPattern& pattern);
bool contains(const Permutation& perm, const VincularPattern& pattern);

// Every occurrence, lexicographically ordered by position tuple.
std::vector<Occurrence> occurrences(const Permutation& perm,
                                    const VincularPattern& pattern);

// An unordered, duplicate-free set of patterns, stored sorted by text.
class PatternSet {
 public:
  PatternSet() = default;
  PatternSet(std::initializer_list<VincularPattern> patterns);
  explicit PatternSet(std::vector<VincularPattern> patterns);

  // Comma-separated list, e.g. "1-23,2-13". Whitespace around items and
  // surrounding braces are ignored; "" and "{}" are the empty set.
  static PatternSet parse(std::string_view text);

  std::size_t size() const { return patterns_.size(); }
  bool empty() const { return patterns_.empty(); }
  auto begin() const { return patterns_.begin(); }
  auto end() const { return patterns_.end(); }
  const VincularPattern& operator[](std::size_t i) const {
    return patterns_[i];
  }

  bool contains(const VincularPattern& pattern) const;
  bool is_subset_of(const PatternSet& other) const;
  PatternSet with(const VincularPattern& pattern) const;
  // Patterns of `this` missing from `other`.
  PatternSet minus(const PatternSet& other) const;

  std::vector<std::string> to_strings() const;
  // "{1-23,2-13}"
  std::string to_string() const;

  friend bool operator==(const PatternSet&, const PatternSet&) = default;
  friend std::strong_ordering operator<=>(const PatternSet& a,
                                          const PatternSet& b) {
    return a.patterns_ <=> b.patterns_;
  }

 private:
  std::vector<VincularPattern> patterns_;
};

// The twelve length-3 patterns of type (1,2) or (2,1), in the customary
// order 1-23, 12-3, 1-32, 13-2, 3-12, 31-2, 2-13, 21-3, 2-31, 23-1, 3-21,
// 32-1.
const std::vector<VincularPattern>& length_three_patterns();
const PatternSet& length_three_pattern_set();
bool is_length_three_pattern(const VincularPattern& pattern);

bool avoids_all(std::span<const int> word, const PatternSet& patterns);
bool avoids_all(const Permutation& perm, const PatternSet& patterns);

}  // namespace vincular

#endif  // VINCULAR_PATTERN_HPP_
