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

#ifndef VINCULAR_ENUMERATE_HPP_
#define VINCULAR_ENUMERATE_HPP_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "vincular/pattern.hpp"
#include "vincular/permutation.hpp"

namespace vincular {

struct EnumerationOptions {
  // Independent DFS roots (choice of first value) are spread over this many
  // threads. Results never depend on it.
  unsigned workers = 1;
};

inline constexpr int kMaxCountLength = 20;
inline constexpr int kMaxListLength = 12;
inline constexpr int kMaxNaiveLength = 8;
inline constexpr int kMaxSequenceLength = 12;

// |S_n(P)| by pruned depth-first search. Requires 1 <= n <= 20.
std::uint64_t count_avoiders(int n, const PatternSet& patterns,
                             const EnumerationOptions& options = {});

// S_n(P) in lexicographic order. Requires 1 <= n <= 12.
std::vector<Permutation> list_avoiders(int n, const PatternSet& patterns);

// Visits S_n(P) in lexicographic order until `visit` returns false. Returns
// false if stopped early. Requires 1 <= n <= 12.
bool for_each_avoider(int n, const PatternSet& patterns,
                      const std::function<bool(std::span<const int>)>& visit);

// Filters all n! permutations through avoids_all. Oracle only; requires
// 1 <= n <= 8.
std::uint64_t count_avoiders_naive(int n, const PatternSet& patterns);

struct CountingSequence {
  PatternSet pattern_set;
  // counts[i] = |S_{i+1}(P)|
  std::vector<std::uint64_t> counts;

  int max_length() const { return static_cast<int>(counts.size()); }
  std::uint64_t at(int n) const { return counts.at(static_cast<std::size_t>(n - 1)); }

  friend bool operator==(const CountingSequence&,
                         const CountingSequence&) = default;
};

// Counts for n = 1..max_n; once a count is zero the rest are zero without
// further search. Requires 1 <= max_n <= 12.
CountingSequence counting_sequence(int max_n, const PatternSet& patterns,
                                   const EnumerationOptions& options = {});

}  // namespace vincular

#endif  // VINCULAR_ENUMERATE_HPP_
