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

#ifndef VINCULAR_CLASSIFY_HPP_
#define VINCULAR_CLASSIFY_HPP_

#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "vincular/enumerate.hpp"
#include "vincular/lemmas.hpp"
#include "vincular/sequences.hpp"
#include "vincular/symmetry.hpp"
#include "vincular/tables.hpp"

namespace vincular {

struct ClassifyOptions {
  unsigned workers = 1;
  // Cross-check the pruned counter against the n!-filter for n <= 8.
  bool oracle_check = true;
};

inline constexpr int kMaxClassifyLength = 10;

// All C(12, k) subsets of the twelve length-3 patterns grouped by symmetry
// class, sorted by canonical representative. Requires 1 <= k <= 6.
std::vector<SymmetryClass> partition_into_symmetry_classes(int k);

struct ClassResult {
  SymmetryClass symmetry;
  CountingSequence sequence;
  SequenceMatch match;
  // First n with |S_n| = 0, if reached.
  std::optional<int> zero_from;
  bool oracle_checked = false;
  bool oracle_agrees = true;
};

struct ClassificationReport {
  int k = 0;
  int max_n = 0;
  std::vector<ClassResult> classes;

  std::size_t subsets_covered() const;
};

// Counts and matches one representative per class. Table names are bound
// from `names` when given. Requires k in 3..6 and 7 <= max_n <= 10.
ClassificationReport classify_all(int k, int max_n,
                                  const ClassifyOptions& options = {},
                                  const TableCatalogue* names = nullptr);

// Outcome for one concrete set of a table row.
struct SetCheck {
  ExpandedSet source;
  CountingSequence sequence;
  SequenceMatch match;
  std::optional<int> zero_from;
  bool arity_ok = true;
  bool family_ok = false;
  bool oracle_agrees = true;
  // Derived rows: the base set plus the added pattern rebuilds the row set.
  bool union_ok = true;
  // Closure-derived rows: S_n(base) = S_n(base + added) and equal counts.
  std::optional<Verdict> closure;
  bool base_counts_equal = true;
  // Superset-derived rows (zero classes): base is a subset of the set.
  bool superset_ok = true;
  std::optional<Verdict> structure;

  bool passed() const;
  std::vector<std::string> failures() const;
};

struct RowCheck {
  const TableRow* row = nullptr;
  std::vector<SetCheck> sets;
  // Whether the cited proposition actually yields the added pattern. A
  // mismatch is reported but does not fail the row; the closure itself is
  // verified independently.
  bool citation_ok = true;
  std::string citation_note;

  bool sets_agree() const;
  // Rows with an erratum pass when the documented mismatch is reproduced.
  bool passed() const;
};

struct TableVerification {
  int table_id = 0;
  int max_n = 0;
  std::vector<RowCheck> rows;

  bool passed() const;
  std::size_t rows_passed() const;
};

// Requires 7 <= max_n <= 10. Throws Error(kData) if the table is missing.
TableVerification verify_table(const TableCatalogue& catalogue, int table_id,
                               int max_n, const ClassifyOptions& options = {});

struct DedupeGroup {
  PatternSet canonical;
  // (1-based box-row, set)
  std::vector<std::pair<int, PatternSet>> members;
};

struct DedupeResult {
  std::size_t raw = 0;
  std::size_t distinct = 0;
  // Classes reached by more than one cross-product choice.
  std::vector<DedupeGroup> duplicates;
  std::set<int> duplicate_box_rows;

  bool duplicates_only_in(int box_row) const;
};

DedupeResult dedupe_cross_product_classes(const TableCatalogue& catalogue,
                                          int table_id = 7);

struct CoverageResult {
  int k = 0;
  std::size_t classes = 0;
  std::size_t covered = 0;
  std::vector<PatternSet> uncovered;
  // Classes listed by more than one row, as "label/label {class}".
  std::vector<std::string> listed_twice;
  // Rows whose sets do not have k patterns.
  std::vector<std::string> wrong_arity;

  bool complete() const { return uncovered.empty() && wrong_arity.empty(); }
};

CoverageResult table_coverage(const TableCatalogue& catalogue, int k,
                              std::span<const int> table_ids);

}  // namespace vincular

#endif  // VINCULAR_CLASSIFY_HPP_
