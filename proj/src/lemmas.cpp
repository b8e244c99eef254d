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

#include "vincular/lemmas.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "parallel.hpp"
#include "vincular/enumerate.hpp"
#include "vincular/error.hpp"

namespace vincular {
namespace {

constexpr std::pair<StructureTemplate, std::string_view> kTemplateNames[] = {
    {StructureTemplate::kDecreasingPair, "decreasing-pair"},
    {StructureTemplate::kTopSwapPair, "top-swap-pair"},
    {StructureTemplate::kDecreasingOrIdentity, "decreasing-or-identity"},
    {StructureTemplate::kZigzagPair, "zigzag-pair"},
    {StructureTemplate::kLeadOnePair, "lead-one-pair"},
    {StructureTemplate::kBottomSwapPair, "bottom-swap-pair"},
    {StructureTemplate::kSingletonDecreasing, "singleton-decreasing"},
};

void require_bound(int max_n) {
  if (max_n < 1 || max_n > kMaxVerificationLength) {
    throw_range_error("verification bound " + std::to_string(max_n) +
                      " outside 1.." + std::to_string(kMaxVerificationLength));
  }
}

std::vector<int> descending(int from, int to) {
  std::vector<int> out;
  for (int v = from; v >= to; --v) out.push_back(v);
  return out;
}

// Alternates the smallest and largest remaining values.
std::vector<int> zigzag(int n, bool start_low) {
  std::vector<int> out;
  int lo = 1;
  int hi = n;
  bool low = start_low;
  while (lo <= hi) {
    out.push_back(low ? lo++ : hi--);
    low = !low;
  }
  return out;
}

VincularPattern pat(std::string_view text) { return parse_pattern(text); }

std::vector<VincularPattern> column(std::initializer_list<std::string_view> texts) {
  std::vector<VincularPattern> out;
  for (auto t : texts) out.push_back(pat(t));
  return out;
}

LemmaDefinition closure(std::string id, std::initializer_list<std::string_view> premise,
                        std::string_view extra) {
  std::vector<VincularPattern> p;
  for (auto t : premise) p.push_back(pat(t));
  PatternSet set(std::move(p));
  std::string statement = "S" + set.to_string() + " = S" +
                          set.with(pat(extra)).to_string();
  return {std::move(id), LemmaKind::kClosure, std::move(set), pat(extra), {},
          std::nullopt, std::move(statement)};
}

LemmaDefinition implication(std::string id, std::string_view p,
                            std::string_view q) {
  return {std::move(id),
          LemmaKind::kContainmentImplication,
          PatternSet{pat(p)},
          pat(q),
          {},
          std::nullopt,
          "contains " + std::string(p) + " => contains " + std::string(q)};
}

LemmaDefinition structure(std::string id, PatternColumns columns,
                          StructureTemplate t) {
  std::string statement = "S_n = " + std::string(to_string(t)) + " for ";
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i > 0) statement += " x ";
    statement += '{';
    for (std::size_t j = 0; j < columns[i].size(); ++j) {
      if (j > 0) statement += '|';
      statement += columns[i][j].to_string();
    }
    statement += '}';
  }
  return {std::move(id), LemmaKind::kStructure, {}, std::nullopt,
          std::move(columns), t, std::move(statement)};
}

}  // namespace

std::string_view to_string(StructureTemplate t) {
  for (const auto& [value, name] : kTemplateNames) {
    if (value == t) return name;
  }
  return "?";
}

std::optional<StructureTemplate> structure_template_from_string(
    std::string_view name) {
  for (const auto& [value, text] : kTemplateNames) {
    if (text == name) return value;
  }
  return std::nullopt;
}

std::vector<Permutation> expected_structure(StructureTemplate t, int n) {
  if (n < 3) throw_range_error("structure templates start at n = 3");
  std::vector<std::vector<int>> words;
  words.push_back(descending(n, 1));
  switch (t) {
    case StructureTemplate::kDecreasingPair: {
      auto w = descending(n - 1, 1);
      w.push_back(n);
      words.push_back(std::move(w));
      break;
    }
    case StructureTemplate::kTopSwapPair: {
      std::vector<int> w = {n - 1, n};
      for (int v : descending(n - 2, 1)) w.push_back(v);
      words.push_back(std::move(w));
      break;
    }
    case StructureTemplate::kDecreasingOrIdentity: {
      std::vector<int> w(static_cast<std::size_t>(n));
      std::iota(w.begin(), w.end(), 1);
      words.push_back(std::move(w));
      break;
    }
    case StructureTemplate::kZigzagPair:
      words = {zigzag(n, true), zigzag(n, false)};
      break;
    case StructureTemplate::kLeadOnePair: {
      std::vector<int> w = {1};
      for (int v : descending(n, 2)) w.push_back(v);
      words.push_back(std::move(w));
      break;
    }
    case StructureTemplate::kBottomSwapPair: {
      auto w = descending(n, 3);
      w.push_back(1);
      w.push_back(2);
      words.push_back(std::move(w));
      break;
    }
    case StructureTemplate::kSingletonDecreasing:
      break;
  }
  std::vector<Permutation> out;
  for (auto& w : words) out.emplace_back(std::move(w));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<PatternSet> expand_columns(const PatternColumns& columns) {
  std::vector<std::vector<VincularPattern>> partial = {{}};
  for (const auto& choices : columns) {
    std::vector<std::vector<VincularPattern>> next;
    for (const auto& prefix : partial) {
      for (const auto& choice : choices) {
        auto extended = prefix;
        extended.push_back(choice);
        next.push_back(std::move(extended));
      }
    }
    partial = std::move(next);
  }
  std::vector<PatternSet> out;
  out.reserve(partial.size());
  for (auto& p : partial) out.emplace_back(std::move(p));
  return out;
}

Verdict verify_closure(const PatternSet& premise, const VincularPattern& extra,
                       int max_n) {
  require_bound(max_n);
  Verdict verdict;
  for (int n = 1; n <= max_n; ++n) {
    for_each_avoider(n, premise, [&](std::span<const int> perm) {
      if (!contains(perm, extra)) return true;
      verdict.holds = false;
      verdict.witness = Permutation(std::vector<int>(perm.begin(), perm.end()));
      return false;
    });
    if (!verdict.holds) {
      verdict.detail = verdict.witness->to_string() + " avoids " +
                       premise.to_string() + " but contains " +
                       extra.to_string();
      return verdict;
    }
    verdict.checked_up_to = n;
  }
  return verdict;
}

Verdict verify_containment_implication(const VincularPattern& p,
                                       const VincularPattern& q, int max_n) {
  // Containing p forces q exactly when every avoider of q avoids p.
  Verdict verdict = verify_closure(PatternSet{q}, p, max_n);
  if (!verdict.holds) {
    verdict.detail = verdict.witness->to_string() + " contains " +
                     p.to_string() + " but avoids " + q.to_string();
  }
  return verdict;
}

Verdict verify_structure(StructureTemplate t, const PatternSet& patterns,
                         int max_n) {
  require_bound(max_n);
  Verdict verdict;
  verdict.checked_up_to = max_n;
  for (int n = 3; n <= max_n; ++n) {
    const auto expected = expected_structure(t, n);
    const auto actual = list_avoiders(n, patterns);
    if (actual == expected) continue;
    verdict.holds = false;
    verdict.failing_set = patterns;
    verdict.checked_up_to = n - 1;
    for (const auto& perm : actual) {
      if (!std::binary_search(expected.begin(), expected.end(), perm)) {
        verdict.witness = perm;
        break;
      }
    }
    verdict.detail = patterns.to_string() + " has " +
                     std::to_string(actual.size()) + " avoiders at n = " +
                     std::to_string(n) + ", expected " +
                     std::string(to_string(t));
    return verdict;
  }
  return verdict;
}

Verdict verify_structure(StructureTemplate t, const PatternColumns& columns,
                         int max_n) {
  require_bound(max_n);
  for (const PatternSet& set : expand_columns(columns)) {
    Verdict verdict = verify_structure(t, set, max_n);
    if (!verdict.holds) return verdict;
  }
  Verdict verdict;
  verdict.checked_up_to = max_n;
  return verdict;
}

std::string_view to_string(LemmaKind kind) {
  switch (kind) {
    case LemmaKind::kClosure:
      return "closure";
    case LemmaKind::kContainmentImplication:
      return "containment_implication";
    case LemmaKind::kStructure:
      return "structure";
  }
  return "?";
}

const std::vector<LemmaDefinition>& lemma_catalogue() {
  static const std::vector<LemmaDefinition> lemmas = [] {
    const auto a = column({"1-23"});
    const auto b = column({"12-3"});
    const auto d = column({"32-1"});
    const auto x213 = column({"2-13", "21-3"});
    const auto x231 = column({"2-31", "23-1"});
    const auto x132 = column({"1-32", "13-2"});
    const auto x312 = column({"3-12", "31-2"});
    using T = StructureTemplate;
    return std::vector<LemmaDefinition>{
        closure("P1", {"2-13"}, "21-3"),
        closure("P2", {"31-2"}, "3-12"),
        closure("P3", {"2-31"}, "23-1"),
        closure("P4", {"13-2"}, "1-32"),
        closure("P5", {"1-23", "2-13"}, "12-3"),
        closure("P6", {"1-23", "21-3"}, "12-3"),
        closure("P7", {"1-23", "2-31"}, "12-3"),
        closure("P8", {"1-23", "23-1"}, "12-3"),
        implication("C1", "23-1", "2-31"),
        implication("C2", "1-32", "13-2"),
        implication("C3", "21-3", "2-13"),
        implication("C4", "3-12", "31-2"),
        structure("S1", {a, x231, x132, x312}, T::kDecreasingPair),
        structure("S2", {a, x213, x132, x312}, T::kTopSwapPair),
        structure("S3", {x213, x231, x132, x312}, T::kDecreasingOrIdentity),
        structure("S4", {b, x213, x231, d}, T::kZigzagPair),
        structure("S5", {a, x213, x231, x312}, T::kLeadOnePair),
        structure("S6", {a, x213, x231, x132}, T::kBottomSwapPair),
        structure("S7", {x213, x231, x132, x312, a}, T::kSingletonDecreasing),
    };
  }();
  return lemmas;
}

const LemmaDefinition* find_lemma(std::string_view id) {
  for (const auto& lemma : lemma_catalogue()) {
    if (lemma.id == id) return &lemma;
  }
  return nullptr;
}

LemmaRecord verify_lemma(const LemmaDefinition& lemma, int max_n) {
  switch (lemma.kind) {
    case LemmaKind::kClosure:
      return {&lemma, verify_closure(lemma.premise, *lemma.conclusion, max_n)};
    case LemmaKind::kContainmentImplication:
      return {&lemma, verify_containment_implication(lemma.premise[0],
                                                     *lemma.conclusion, max_n)};
    case LemmaKind::kStructure:
      return {&lemma, verify_structure(*lemma.structure, lemma.columns, max_n)};
  }
  throw Error(ErrorCode::kInternal, "unknown lemma kind");
}

std::vector<LemmaRecord> verify_all_lemmas(int max_n, unsigned workers) {
  const auto& lemmas = lemma_catalogue();
  std::vector<LemmaRecord> records(lemmas.size());
  detail::parallel_for(lemmas.size(), workers, [&](std::size_t i) {
    records[i] = verify_lemma(lemmas[i], max_n);
  });
  return records;
}

}  // namespace vincular
