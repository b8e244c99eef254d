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

#ifndef VINCULAR_LEMMAS_HPP_
#define VINCULAR_LEMMAS_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vincular/pattern.hpp"
#include "vincular/permutation.hpp"

namespace vincular {

inline constexpr int kMaxVerificationLength = 10;

// Explicit two-element (or one-element) avoider sets proved for the
// constant classes. Each materializes to a lexicographically sorted list.
enum class StructureTemplate {
  kDecreasingPair,        // n...21, (n-1)...21n
  kTopSwapPair,           // n...21, (n-1)n(n-2)...1
  kDecreasingOrIdentity,  // n...21, 12...n
  kZigzagPair,            // 1n2(n-1)..., n1(n-1)2...
  kLeadOnePair,           // n...21, 1n(n-1)...2
  kBottomSwapPair,        // n...321, n...312
  kSingletonDecreasing,   // n...21
};

std::string_view to_string(StructureTemplate t);
std::optional<StructureTemplate> structure_template_from_string(
    std::string_view name);

// Requires n >= 3.
std::vector<Permutation> expected_structure(StructureTemplate t, int n);

// One pattern is chosen from each column.
using PatternColumns = std::vector<std::vector<VincularPattern>>;
// Cross product in row-major order (last column varies fastest).
std::vector<PatternSet> expand_columns(const PatternColumns& columns);

struct Verdict {
  bool holds = true;
  int checked_up_to = 0;
  // Lexicographically least counterexample of the least failing length.
  std::optional<Permutation> witness;
  // verify_structure only: the first pattern set that disagreed.
  std::optional<PatternSet> failing_set;
  std::string detail;
};

// S_n(A) == S_n(A + q) for all n <= max_n.
Verdict verify_closure(const PatternSet& premise, const VincularPattern& extra,
                       int max_n);
// Every permutation of length <= max_n containing `p` contains `q`.
Verdict verify_containment_implication(const VincularPattern& p,
                                       const VincularPattern& q, int max_n);
// Every set from the cross product has exactly the template's avoiders for
// 3 <= n <= max_n.
Verdict verify_structure(StructureTemplate t, const PatternColumns& columns,
                         int max_n);
Verdict verify_structure(StructureTemplate t, const PatternSet& patterns,
                         int max_n);

enum class LemmaKind { kClosure, kContainmentImplication, kStructure };
std::string_view to_string(LemmaKind kind);

struct LemmaDefinition {
  std::string id;  // P1..P8, C1..C4, S1..S7
  LemmaKind kind;
  PatternSet premise;                        // closure, implication
  std::optional<VincularPattern> conclusion;  // closure, implication
  PatternColumns columns;                     // structure
  std::optional<StructureTemplate> structure;
  std::string statement;
};

const std::vector<LemmaDefinition>& lemma_catalogue();
const LemmaDefinition* find_lemma(std::string_view id);

struct LemmaRecord {
  const LemmaDefinition* lemma = nullptr;
  Verdict verdict;
  int verified_up_to() const { return verdict.checked_up_to; }
};

LemmaRecord verify_lemma(const LemmaDefinition& lemma, int max_n);
std::vector<LemmaRecord> verify_all_lemmas(int max_n, unsigned workers = 1);

}  // namespace vincular

#endif  // VINCULAR_LEMMAS_HPP_
