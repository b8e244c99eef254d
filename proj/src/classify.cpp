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

#include "vincular/classify.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "parallel.hpp"
#include "vincular/error.hpp"

namespace vincular {
namespace {

constexpr int kOracleLimit = kMaxNaiveLength;

void require_window(int max_n) {
  if (max_n < kMinMatchWindow || max_n > kMaxClassifyLength) {
    throw_range_error("max length " + std::to_string(max_n) + " outside " +
                      std::to_string(kMinMatchWindow) + ".." +
                      std::to_string(kMaxClassifyLength));
  }
}

std::optional<int> first_zero(const CountingSequence& seq) {
  for (int n = 1; n <= seq.max_length(); ++n) {
    if (seq.at(n) == 0) return n;
  }
  return std::nullopt;
}

bool oracle_agrees(const CountingSequence& seq) {
  const int limit = std::min(seq.max_length(), kOracleLimit);
  for (int n = 1; n <= limit; ++n) {
    if (count_avoiders_naive(n, seq.pattern_set) != seq.at(n)) return false;
  }
  return true;
}

std::map<PatternSet, std::string> bind_names(const TableCatalogue& catalogue) {
  std::map<PatternSet, std::string> names;
  for (const auto& table : catalogue.tables()) {
    for (const auto& row : table.rows) {
      if (row.name.empty()) continue;
      for (const auto& e : catalogue.expand(row)) {
        auto& slot = names[canonical_representative(e.set)];
        if (slot.empty()) {
          slot = row.name;
        } else if (slot != row.name) {
          slot += "/" + row.name;
        }
      }
    }
  }
  return names;
}

SetCheck check_set(const Table& table, const TableRow& row, ExpandedSet source,
                   int max_n, const ClassifyOptions& options) {
  SetCheck check;
  check.source = std::move(source);
  const PatternSet& set = check.source.set;
  check.arity_ok = static_cast<int>(set.size()) == table.arity;
  check.sequence = counting_sequence(max_n, set);
  if (options.oracle_check) check.oracle_agrees = oracle_agrees(check.sequence);
  check.match = match_sequence(check.sequence);
  check.family_ok = check.match.family() != nullptr &&
                    claim_agrees(row.family, *check.match.family());
  check.zero_from = first_zero(check.sequence);

  if (check.source.base) {
    const PatternSet& base = *check.source.base;
    const auto& added = check.source.added;
    check.union_ok = added.has_value() && !base.contains(*added) &&
                     base.with(*added) == set;
    if (!row.proposition.empty()) {
      if (added) check.closure = verify_closure(base, *added, max_n);
      check.base_counts_equal =
          counting_sequence(max_n, base).counts == check.sequence.counts;
    } else {
      check.superset_ok = base.is_subset_of(set);
    }
  }
  if (row.structure) {
    check.structure = verify_structure(*row.structure, set, max_n);
  }
  return check;
}

RowCheck check_row(const TableCatalogue& catalogue, const Table& table,
                   const TableRow& row, int max_n,
                   const ClassifyOptions& options) {
  RowCheck check;
  check.row = &row;
  for (auto& e : catalogue.expand(row)) {
    check.sets.push_back(check_set(table, row, std::move(e), max_n, options));
  }
  if (!row.proposition.empty()) {
    const LemmaDefinition* lemma = find_lemma(row.proposition);
    for (const auto& s : check.sets) {
      if (!s.source.base || !s.source.added) continue;
      const bool applies = lemma->premise.is_subset_of(*s.source.base) &&
                           lemma->conclusion == s.source.added;
      if (!applies && check.citation_ok) {
        check.citation_ok = false;
        check.citation_note = row.proposition + " (" + lemma->statement +
                              ") does not add " + s.source.added->to_string() +
                              " to " + s.source.base->to_string();
      }
    }
  }
  return check;
}

}  // namespace

std::vector<SymmetryClass> partition_into_symmetry_classes(int k) {
  if (k < 1 || k > 6) throw_range_error("subset size must be in 1..6");
  const auto& all = length_three_patterns();
  std::map<PatternSet, SymmetryClass> classes;
  for (unsigned mask = 0; mask < (1u << all.size()); ++mask) {
    if (std::popcount(mask) != k) continue;
    std::vector<VincularPattern> chosen;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (mask & (1u << i)) chosen.push_back(all[i]);
    }
    SymmetryClass cls = symmetry_class(PatternSet(std::move(chosen)));
    classes.try_emplace(cls.canonical, std::move(cls));
  }
  std::vector<SymmetryClass> out;
  out.reserve(classes.size());
  for (auto& [key, cls] : classes) out.push_back(std::move(cls));
  return out;
}

std::size_t ClassificationReport::subsets_covered() const {
  std::size_t total = 0;
  for (const auto& c : classes) total += c.symmetry.members.size();
  return total;
}

ClassificationReport classify_all(int k, int max_n,
                                  const ClassifyOptions& options,
                                  const TableCatalogue* names) {
  if (k < 3 || k > 6) throw_range_error("classification needs k in 3..6");
  require_window(max_n);
  ClassificationReport report;
  report.k = k;
  report.max_n = max_n;
  auto classes = partition_into_symmetry_classes(k);
  if (names != nullptr) {
    const auto bound = bind_names(*names);
    for (auto& cls : classes) {
      if (auto it = bound.find(cls.canonical); it != bound.end()) {
        cls.name = it->second;
      }
    }
  }
  report.classes.resize(classes.size());
  detail::parallel_for(classes.size(), options.workers, [&](std::size_t i) {
    ClassResult& r = report.classes[i];
    r.symmetry = std::move(classes[i]);
    r.sequence = counting_sequence(max_n, r.symmetry.canonical);
    r.match = match_sequence(r.sequence);
    r.zero_from = first_zero(r.sequence);
    if (options.oracle_check) {
      r.oracle_checked = true;
      r.oracle_agrees = oracle_agrees(r.sequence);
    }
  });
  return report;
}

bool SetCheck::passed() const { return failures().empty(); }

std::vector<std::string> SetCheck::failures() const {
  std::vector<std::string> out;
  if (!arity_ok) out.push_back("wrong number of patterns");
  if (!oracle_agrees) out.push_back("pruned count disagrees with brute force");
  if (!family_ok) out.push_back("counts do not match the claimed sequence");
  if (!union_ok) out.push_back("base plus added pattern does not give the set");
  if (closure && !closure->holds) out.push_back("closure fails: " + closure->detail);
  if (!base_counts_equal) out.push_back("counts differ from the base class");
  if (!superset_ok) out.push_back("set does not contain its base");
  if (structure && !structure->holds) {
    out.push_back("structure fails: " + structure->detail);
  }
  return out;
}

bool RowCheck::sets_agree() const {
  return std::all_of(sets.begin(), sets.end(),
                     [](const SetCheck& s) { return s.passed(); });
}

bool RowCheck::passed() const {
  return row->erratum.empty() ? sets_agree() : !sets_agree();
}

bool TableVerification::passed() const {
  return rows_passed() == rows.size();
}

std::size_t TableVerification::rows_passed() const {
  return static_cast<std::size_t>(std::count_if(
      rows.begin(), rows.end(), [](const RowCheck& r) { return r.passed(); }));
}

TableVerification verify_table(const TableCatalogue& catalogue, int table_id,
                               int max_n, const ClassifyOptions& options) {
  require_window(max_n);
  const Table& table = catalogue.table(table_id);
  TableVerification out;
  out.table_id = table_id;
  out.max_n = max_n;
  out.rows.resize(table.rows.size());
  detail::parallel_for(table.rows.size(), options.workers, [&](std::size_t i) {
    out.rows[i] = check_row(catalogue, table, table.rows[i], max_n, options);
  });
  return out;
}

bool DedupeResult::duplicates_only_in(int box_row) const {
  return duplicate_box_rows.size() == 1 && *duplicate_box_rows.begin() == box_row;
}

DedupeResult dedupe_cross_product_classes(const TableCatalogue& catalogue,
                                          int table_id) {
  const Table& table = catalogue.table(table_id);
  std::map<PatternSet, DedupeGroup> groups;
  DedupeResult result;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    for (const auto& e : catalogue.expand(table.rows[r])) {
      ++result.raw;
      const PatternSet canonical = canonical_representative(e.set);
      auto& group = groups[canonical];
      group.canonical = canonical;
      group.members.emplace_back(static_cast<int>(r + 1), e.set);
    }
  }
  result.distinct = groups.size();
  for (auto& [key, group] : groups) {
    if (group.members.size() < 2) continue;
    for (const auto& [box_row, set] : group.members) {
      result.duplicate_box_rows.insert(box_row);
    }
    result.duplicates.push_back(std::move(group));
  }
  return result;
}

CoverageResult table_coverage(const TableCatalogue& catalogue, int k,
                              std::span<const int> table_ids) {
  CoverageResult result;
  result.k = k;
  std::map<PatternSet, std::vector<std::string>> listed;
  for (const auto& cls : partition_into_symmetry_classes(k)) {
    listed[cls.canonical];
  }
  result.classes = listed.size();
  for (int id : table_ids) {
    for (const auto& row : catalogue.table(id).rows) {
      for (const auto& e : catalogue.expand(row)) {
        if (static_cast<int>(e.set.size()) != k) {
          result.wrong_arity.push_back(row.label);
          continue;
        }
        auto it = listed.find(canonical_representative(e.set));
        if (it == listed.end()) {
          result.wrong_arity.push_back(row.label);
          continue;
        }
        auto& labels = it->second;
        if (std::find(labels.begin(), labels.end(), row.label) == labels.end()) {
          labels.push_back(row.label);
        }
      }
    }
  }
  for (const auto& [canonical, labels] : listed) {
    if (labels.empty()) {
      result.uncovered.push_back(canonical);
      continue;
    }
    ++result.covered;
    if (labels.size() > 1) {
      std::string joined;
      for (const auto& l : labels) joined += (joined.empty() ? "" : "/") + l;
      result.listed_twice.push_back(joined + " " + canonical.to_string());
    }
  }
  return result;
}

}  // namespace vincular
