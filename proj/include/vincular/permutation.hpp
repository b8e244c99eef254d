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

#ifndef VINCULAR_PERMUTATION_HPP_
#define VINCULAR_PERMUTATION_HPP_

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vincular {

// A permutation of {1, ..., n} in one-line notation.
class Permutation {
 public:
  static constexpr std::size_t kMaxLength = 20;

  Permutation() = default;
  // Throws Error(kRange) if `values` is not a permutation of 1..n or n > 20.
  explicit Permutation(std::vector<int> values);

  static Permutation identity(std::size_t n);
  static Permutation decreasing(std::size_t n);

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  std::span<const int> values() const { return values_; }
  int operator[](std::size_t i) const { return values_[i]; }

  // Digits without separators for n <= 9, comma-separated otherwise.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation&,
                                          const Permutation&) = default;

 private:
  std::vector<int> values_;
};

// Accepts "4213" (single digits) or "10,2,3,...". The empty string is the
// empty permutation.
Permutation parse_permutation(std::string_view text);

// The unique permutation order-isomorphic to `word`. Throws Error(kRange) on
// duplicate entries.
Permutation standardize(std::span<const int> word);

}  // namespace vincular

#endif  // VINCULAR_PERMUTATION_HPP_
