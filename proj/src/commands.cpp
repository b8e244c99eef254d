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

#include "vincular/commands.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "vincular/classify.hpp"
#include "vincular/enumerate.hpp"
#include "vincular/error.hpp"
#include "vincular/lemmas.hpp"
#include "vincular/permutation.hpp"
#include "vincular/sequences.hpp"
#include "vincular/symmetry.hpp"

namespace vincular {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::string_view kScopeNames[] = {
    "lemmas", "table", "dedupe7", "coverage", "oracle", "symmetry", "all"};

// Known failures used to show the verifiers can say no.
struct NegativeControl {
  const char* id;
  LemmaKind kind;
  const char* premise;
  const char* extra;
  const char* witness;
};

constexpr NegativeControl kNegativeControls[] = {
    {"control.closure", LemmaKind::kClosure, "1-23", "12-3", "2314"},
    {"control.implication", LemmaKind::kContainmentImplication, "2-31", "23-1",
     "3142"},
};

Report start(const RunConfig& config, std::string command) {
  config.validate();
  Report r;
  r.command = std::move(command);
  r.config = config;
  return r;
}

ResultStatus status_of(bool ok) {
  return ok ? ResultStatus::kPass : ResultStatus::kFail;
}

std::string occurrence_text(const Occurrence& occ) {
  std::string s = "(";
  for (std::size_t i = 0; i < occ.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(occ[i]);
  }
  return s + ")";
}

// Fitted family text and match status.
std::pair<std::string, std::string> describe(const SequenceMatch& m) {
  std::string family;
  for (const auto& c : m.candidates) {
    if (!family.empty()) family += " | ";
    family += c.to_string();
  }
  return {family, std::string(to_string(m.status))};
}

int oracle_limit(int max_n) { return std::min(max_n, kMaxNaiveLength); }

// First n <= limit where the pruned count disagrees with brute force.
std::optional<int> oracle_mismatch(const CountingSequence& seq, int limit) {
  for (int n = 1; n <= std::min(limit, seq.max_length()); ++n) {
    if (count_avoiders_naive(n, seq.pattern_set) != seq.at(n)) return n;
  }
  return std::nullopt;
}

std::vector<std::string> set_strings(const std::vector<PatternSet>& sets) {
  std::vector<std::string> out;
  out.reserve(sets.size());
  for (const auto& s : sets) out.push_back(s.to_string());
  return out;
}

std::string verdict_note(const Verdict& v) {
  std::string s = v.holds ? "holds" : "fails";
  s += " for n <= " + std::to_string(v.checked_up_to);
  if (!v.detail.empty()) s += ": " + v.detail;
  return s;
}

ResultEntry lemma_entry(const LemmaRecord& rec) {
  const LemmaDefinition& lemma = *rec.lemma;
  ResultEntry e;
  e.id = lemma.id;
  Derivation d;
  d.kind = std::string(to_string(lemma.kind));
  d.proposition = lemma.id;
  if (lemma.kind == LemmaKind::kStructure) {
    e.pattern_sets = set_strings(expand_columns(lemma.columns));
    d.note = std::string(to_string(*lemma.structure));
  } else {
    e.pattern_sets = {lemma.premise.to_string()};
    d.base = lemma.premise.to_string();
    d.added = lemma.conclusion->to_string();
  }
  d.verified = rec.verdict.holds;
  e.derivation = d;
  e.status = status_of(rec.verdict.holds);
  if (rec.verdict.witness) e.witness = rec.verdict.witness->to_string();
  e.notes = {lemma.statement, verdict_note(rec.verdict)};
  if (rec.verdict.failing_set) {
    e.notes.push_back("failing set " + rec.verdict.failing_set->to_string());
  }
  e.details = {{"checked_up_to", rec.verdict.checked_up_to}};
  return e;
}

void add_lemmas(Report& report) {
  const RunConfig& c = report.config;
  const int max_n = std::min(c.max_n, kMaxVerificationLength);
  for (const auto& rec : verify_all_lemmas(max_n, c.workers)) {
    report.add(lemma_entry(rec));
  }
  for (const auto& control : kNegativeControls) {
    const PatternSet premise = PatternSet::parse(control.premise);
    const VincularPattern extra = parse_pattern(control.extra);
    const Verdict v =
        control.kind == LemmaKind::kClosure
            ? verify_closure(premise, extra, max_n)
            : verify_containment_implication(parse_pattern(control.premise),
                                             extra, max_n);
    ResultEntry e;
    e.id = control.id;
    e.pattern_sets = {premise.to_string()};
    Derivation d;
    d.kind = std::string(to_string(control.kind));
    d.base = premise.to_string();
    d.added = extra.to_string();
    d.verified = v.holds;
    d.note = "expected to fail with witness " + std::string(control.witness);
    e.derivation = d;
    if (v.witness) e.witness = v.witness->to_string();
    e.status = status_of(!v.holds && e.witness == control.witness);
    e.notes = {verdict_note(v)};
    report.add(std::move(e));
  }
}

std::string derivation_kind(const TableRow& row) {
  if (!row.proposition.empty()) return "closure";
  if (row.structure) return "structure";
  if (!row.base.empty() || !row.base_sets.empty()) return "superset";
  if (!row.columns.empty()) return "cross-product";
  return "explicit";
}

ResultEntry row_entry(const RowCheck& check) {
  const TableRow& row = *check.row;
  ResultEntry e;
  e.id = row.label;
  e.claimed = row.sequence;
  Json sets = Json::array();
  for (const auto& s : check.sets) {
    e.pattern_sets.push_back(s.source.set.to_string());
    e.counts.push_back(s.sequence.counts);
    Json js{{"set", s.source.set.to_string()}, {"provenance", s.source.provenance}};
    js["zero_from"] = s.zero_from ? Json(*s.zero_from) : Json(nullptr);
    js["oracle_agrees"] = s.oracle_agrees;
    if (s.closure) js["closure_holds"] = s.closure->holds;
    if (s.structure) js["structure_holds"] = s.structure->holds;
    sets.push_back(std::move(js));
    for (const auto& f : s.failures()) {
      e.notes.push_back(s.source.set.to_string() + ": " + f);
    }
    if (!s.closure || s.closure->holds) continue;
    if (s.closure->witness && !e.witness) e.witness = s.closure->witness->to_string();
  }
  if (!check.sets.empty()) {
    std::tie(e.family, e.match) = describe(check.sets.front().match);
    for (const auto& s : check.sets) {
      if (describe(s.match).first != e.family) {
        e.notes.push_back("sets of this row fit different families");
        break;
      }
    }
  }
  Derivation d;
  d.kind = derivation_kind(row);
  d.proposition = row.proposition;
  d.base = row.base;
  if (!row.add.empty()) {
    for (const auto& p : row.add) d.added += (d.added.empty() ? "" : ",") + p.to_string();
  }
  if (row.structure) d.note = std::string(to_string(*row.structure));
  bool verified = true;
  bool any = false;
  for (const auto& s : check.sets) {
    if (s.closure) { any = true; verified = verified && s.closure->holds; }
    if (s.structure) { any = true; verified = verified && s.structure->holds; }
  }
  if (any) d.verified = verified;
  d.citation_ok = check.citation_ok;
  if (!check.citation_ok) {
    d.note = "citation mismatch: " + check.citation_note;
    e.notes.push_back(d.note);
  }
  e.derivation = d;
  if (!row.erratum.empty()) {
    e.status = check.passed() ? ResultStatus::kErratum : ResultStatus::kFail;
    e.notes.push_back(check.passed() ? "erratum reproduced: " + row.erratum
                                     : "documented erratum no longer reproduced");
  } else {
    e.status = status_of(check.passed());
  }
  e.details = {{"sets", std::move(sets)}};
  return e;
}

void add_table(Report& report, const TableCatalogue& catalogue, int id) {
  const RunConfig& c = report.config;
  ClassifyOptions options{c.workers, c.oracle_check};
  const TableVerification tv = verify_table(catalogue, id, c.max_n, options);
  for (const auto& row : tv.rows) report.add(row_entry(row));
}

void add_dedupe(Report& report, const TableCatalogue& catalogue) {
  const Table& table = catalogue.table(7);
  const DedupeResult d = dedupe_cross_product_classes(catalogue, 7);
  Json groups = Json::array();
  for (const auto& g : d.duplicates) {
    Json members = Json::array();
    for (const auto& [box_row, set] : g.members) {
      members.push_back({{"box_row", box_row}, {"set", set.to_string()}});
    }
    groups.push_back({{"canonical", g.canonical.to_string()}, {"members", members}});
  }
  const Json details{{"raw", d.raw},
                     {"distinct", d.distinct},
                     {"duplicate_box_rows", d.duplicate_box_rows},
                     {"duplicates", groups}};
  const auto claims = table.claims;
  auto entry = [&](std::string id, bool ok, std::string note) {
    ResultEntry e;
    e.id = std::move(id);
    e.status = claims ? status_of(ok) : ResultStatus::kUnknown;
    e.notes = {std::move(note)};
    e.details = details;
    report.add(std::move(e));
  };
  entry("dedupe7.raw", claims && d.raw == std::size_t(claims->raw_sets),
        "raw cross-product sets: " + std::to_string(d.raw));
  entry("dedupe7.distinct",
        claims && d.distinct == std::size_t(claims->distinct_classes),
        "distinct symmetry classes: " + std::to_string(d.distinct));
  std::string rows;
  for (int r : d.duplicate_box_rows) rows += (rows.empty() ? "" : ",") + std::to_string(r);
  std::string note = "duplicates come from box-rows " + rows;
  if (claims && !d.duplicates_only_in(claims->duplicate_box_row)) {
    for (const auto& g : d.duplicates) {
      for (const auto& [box_row, set] : g.members) {
        if (box_row == claims->duplicate_box_row) continue;
        note += "; box-row " + std::to_string(box_row) + " gives " +
                set.to_string() + " in class " + g.canonical.to_string();
      }
    }
  }
  entry("dedupe7.box_rows",
        claims && d.duplicates_only_in(claims->duplicate_box_row), note);
}

void add_coverage(Report& report, const TableCatalogue& catalogue) {
  for (int k : {3, 4, 5}) {
    std::vector<int> ids;
    for (const auto& t : catalogue.tables()) {
      if (t.arity == k) ids.push_back(t.id);
    }
    const CoverageResult cov = table_coverage(catalogue, k, ids);
    ResultEntry e;
    e.id = "coverage.k" + std::to_string(k);
    e.pattern_sets = set_strings(cov.uncovered);
    std::string tables;
    for (int id : ids) tables += (tables.empty() ? "" : ",") + std::to_string(id);
    e.notes.push_back(std::to_string(cov.covered) + " of " +
                      std::to_string(cov.classes) + " classes listed in tables " +
                      tables);
    for (const auto& l : cov.listed_twice) e.notes.push_back("listed twice: " + l);
    for (const auto& l : cov.wrong_arity) e.notes.push_back("wrong arity: " + l);
    if (!cov.uncovered.empty()) {
      e.notes.push_back(std::to_string(cov.uncovered.size()) +
                        " classes have no table row");
    }
    // The five-pattern tables do not claim to be exhaustive.
    if (k == 5 && !cov.complete()) {
      e.status = ResultStatus::kUnknown;
    } else {
      e.status = status_of(cov.complete());
    }
    e.details = {{"classes", cov.classes},
                 {"covered", cov.covered},
                 {"listed_twice", cov.listed_twice},
                 {"wrong_arity", cov.wrong_arity}};
    report.add(std::move(e));
  }
}

ResultEntry class_entry(const ClassResult& r, int k, std::size_t index,
                        const TableCatalogue& catalogue) {
  ResultEntry e;
  e.id = r.symmetry.name.empty()
             ? "k" + std::to_string(k) + "." + std::to_string(index + 1)
             : r.symmetry.name;
  e.pattern_sets = {r.symmetry.canonical.to_string()};
  e.counts = {r.sequence.counts};
  std::tie(e.family, e.match) = describe(r.match);
  bool ok = r.oracle_agrees;
  if (!r.oracle_agrees) e.notes.push_back("pruned count disagrees with brute force");
  const SequenceFamily* fitted = r.match.family();
  if (!r.symmetry.name.empty()) {
    std::stringstream names(r.symmetry.name);
    std::string name;
    while (std::getline(names, name, '/')) {
      const TableRow* row = catalogue.find_row(name);
      if (row == nullptr) continue;
      if (!e.claimed.empty()) e.claimed += " / ";
      e.claimed += row->sequence;
      if (fitted == nullptr || !claim_agrees(row->family, *fitted)) {
        ok = false;
        e.notes.push_back(name + " claims " + row->family.to_string());
      }
    }
  }
  if (!ok) {
    e.status = ResultStatus::kFail;
  } else if (fitted == nullptr) {
    e.status = ResultStatus::kUnknown;
  } else {
    e.status = ResultStatus::kPass;
  }
  e.details = {{"members", r.symmetry.members.size()}};
  e.details["zero_from"] = r.zero_from ? Json(*r.zero_from) : Json(nullptr);
  return e;
}

void add_classify(Report& report, const TableCatalogue& catalogue, int k) {
  const RunConfig& c = report.config;
  const ClassifyOptions options{c.workers, c.oracle_check};
  const ClassificationReport cr = classify_all(k, c.max_n, options, &catalogue);
  for (std::size_t i = 0; i < cr.classes.size(); ++i) {
    report.add(class_entry(cr.classes[i], k, i, catalogue));
  }
}

PatternSet random_subset(std::mt19937_64& rng) {
  const auto& all = length_three_patterns();
  const std::uint64_t mask = rng() % (std::uint64_t{1} << all.size());
  std::vector<VincularPattern> chosen;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (mask & (std::uint64_t{1} << i)) chosen.push_back(all[i]);
  }
  return PatternSet(std::move(chosen));
}

void add_oracle(Report& report, const TableCatalogue& catalogue) {
  const RunConfig& c = report.config;
  const int limit = oracle_limit(c.max_n);
  const EnumerationOptions options{c.workers};

  std::vector<std::string> mismatches;
  std::size_t sets = 0;
  for (const auto& table : catalogue.tables()) {
    for (const auto& row : table.rows) {
      for (const auto& e : catalogue.expand(row)) {
        ++sets;
        const auto seq = counting_sequence(limit, e.set, options);
        if (auto n = oracle_mismatch(seq, limit)) {
          mismatches.push_back(e.set.to_string() + " at n=" + std::to_string(*n));
        }
      }
    }
  }
  ResultEntry tables;
  tables.id = "oracle.tables";
  tables.status = status_of(mismatches.empty());
  tables.notes = {std::to_string(sets) + " table sets checked for n <= " +
                  std::to_string(limit)};
  tables.notes.insert(tables.notes.end(), mismatches.begin(), mismatches.end());
  report.add(std::move(tables));

  std::mt19937_64 rng(c.seed);
  mismatches.clear();
  std::vector<std::string> drawn;
  for (int i = 0; i < kRandomOracleSets; ++i) {
    const PatternSet set = random_subset(rng);
    drawn.push_back(set.to_string());
    const auto seq = counting_sequence(limit, set, options);
    if (auto n = oracle_mismatch(seq, limit)) {
      mismatches.push_back(set.to_string() + " at n=" + std::to_string(*n));
    }
  }
  ResultEntry random;
  random.id = "oracle.random";
  random.status = status_of(mismatches.empty());
  random.notes = {std::to_string(kRandomOracleSets) +
                  " random subsets checked for n <= " + std::to_string(limit)};
  random.notes.insert(random.notes.end(), mismatches.begin(), mismatches.end());
  random.details = {{"seed", c.seed}, {"sets", drawn}};
  report.add(std::move(random));
}

void add_symmetry(Report& report) {
  const RunConfig& c = report.config;
  const int limit = std::min(c.max_n, kRandomSuiteLength);
  const EnumerationOptions options{c.workers};
  // Offset so the two suites draw different subsets from one seed.
  std::mt19937_64 rng(c.seed + 1);
  std::vector<std::string> mismatches;
  for (int i = 0; i < kRandomSymmetrySets; ++i) {
    const PatternSet set = random_subset(rng);
    const auto base = counting_sequence(limit, set, options);
    for (SymmetryOp op : kSymmetryOps) {
      const PatternSet image = apply(op, set);
      if (counting_sequence(limit, image, options).counts != base.counts) {
        mismatches.push_back(set.to_string() + " under " +
                             std::string(to_string(op)));
      }
    }
  }
  ResultEntry e;
  e.id = "symmetry.random";
  e.status = status_of(mismatches.empty());
  e.notes = {std::to_string(kRandomSymmetrySets) +
             " random subsets and their images compared for n <= " +
             std::to_string(limit)};
  e.notes.insert(e.notes.end(), mismatches.begin(), mismatches.end());
  e.details = {{"seed", c.seed + 1}};
  report.add(std::move(e));
}

}  // namespace

TableCatalogue load_catalogue(const RunConfig& config) {
  if (config.data_path.empty()) return TableCatalogue::embedded();
  return TableCatalogue::load_file(config.data_path);
}

Report run_check(const RunConfig& config, std::string_view permutation,
                 std::string_view pattern) {
  Report report = start(config, "check");
  const Permutation perm = parse_permutation(permutation);
  const VincularPattern p = parse_pattern(pattern);
  const auto occ = occurrences(perm, p);
  ResultEntry e;
  e.id = "check";
  e.pattern_sets = {PatternSet({p}).to_string()};
  e.status = ResultStatus::kPass;
  Json list = Json::array();
  std::string joined;
  for (const auto& o : occ) {
    list.push_back(o);
    joined += (joined.empty() ? "" : " ") + occurrence_text(o);
  }
  if (occ.empty()) {
    e.notes = {perm.to_string() + " avoids " + p.to_string()};
  } else {
    e.witness = occurrence_text(occ.front());
    e.notes = {perm.to_string() + " contains " + p.to_string(),
               "occurrences " + joined};
  }
  e.details = {{"permutation", perm.to_string()},
               {"pattern", p.to_string()},
               {"contains", !occ.empty()},
               {"occurrences", std::move(list)}};
  report.add(std::move(e));
  return report;
}

Report run_count(const RunConfig& config, const PatternSet& patterns,
                 std::optional<int> n) {
  Report report = start(config, "count");
  const EnumerationOptions options{config.workers};
  ResultEntry e;
  e.id = "count";
  e.pattern_sets = {patterns.to_string()};
  bool ok = true;
  if (n) {
    const std::uint64_t c = count_avoiders(*n, patterns, options);
    e.notes = {"n=" + std::to_string(*n) + ": " + std::to_string(c)};
    if (config.oracle_check && *n <= kMaxNaiveLength) {
      ok = count_avoiders_naive(*n, patterns) == c;
      if (!ok) e.notes.push_back("pruned count disagrees with brute force");
    }
    e.details = {{"n", *n}, {"count", c}};
  } else {
    const auto seq = counting_sequence(config.max_n, patterns, options);
    e.counts = {seq.counts};
    if (config.oracle_check) {
      if (auto bad = oracle_mismatch(seq, oracle_limit(config.max_n))) {
        ok = false;
        e.notes.push_back("pruned count disagrees with brute force at n=" +
                          std::to_string(*bad));
      }
    }
    if (config.max_n >= kMinMatchWindow) {
      std::tie(e.family, e.match) = describe(match_sequence(seq));
    }
  }
  e.status = status_of(ok);
  report.add(std::move(e));
  return report;
}

Report run_list(const RunConfig& config, const PatternSet& patterns, int n) {
  Report report = start(config, "list");
  ResultEntry e;
  e.id = "list";
  e.pattern_sets = {patterns.to_string()};
  Json avoiders = Json::array();
  std::size_t total = 0;
  for_each_avoider(n, patterns, [&](std::span<const int> perm) {
    if (total < kMaxListedAvoiders) {
      avoiders.push_back(Permutation(std::vector<int>(perm.begin(), perm.end()))
                             .to_string());
    }
    ++total;
    return true;
  });
  e.notes = {"|S_" + std::to_string(n) + "| = " + std::to_string(total)};
  if (total > kMaxListedAvoiders) {
    e.notes.push_back("listing truncated to the first " +
                      std::to_string(kMaxListedAvoiders));
  }
  e.status = ResultStatus::kPass;
  e.details = {{"n", n}, {"count", total}, {"avoiders", std::move(avoiders)}};
  report.add(std::move(e));
  return report;
}

Report run_classes(const RunConfig& config, int k) {
  Report report = start(config, "classes");
  const auto classes = partition_into_symmetry_classes(k);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    ResultEntry e;
    e.id = "k" + std::to_string(k) + "." + std::to_string(i + 1);
    for (const auto& m : classes[i].members) e.pattern_sets.push_back(m.to_string());
    e.status = ResultStatus::kPass;
    e.details = {{"canonical", classes[i].canonical.to_string()}};
    report.add(std::move(e));
  }
  return report;
}

Report run_classify(const RunConfig& config, int k) {
  Report report = start(config, "classify");
  add_classify(report, load_catalogue(config), k);
  return report;
}

std::string_view to_string(VerifyScope scope) {
  return kScopeNames[static_cast<int>(scope)];
}

std::optional<VerifyScope> verify_scope_from_string(std::string_view name) {
  for (int i = 0; i < 7; ++i) {
    if (kScopeNames[i] == name) return static_cast<VerifyScope>(i);
  }
  return std::nullopt;
}

Report run_verify(const RunConfig& config, VerifyScope scope, int table_id) {
  Report report = start(config, "verify " + std::string(to_string(scope)));
  if (scope == VerifyScope::kTable) {
    report.command += " " + std::to_string(table_id);
  }
  const TableCatalogue catalogue = load_catalogue(config);
  switch (scope) {
    case VerifyScope::kLemmas: add_lemmas(report); break;
    case VerifyScope::kTable: add_table(report, catalogue, table_id); break;
    case VerifyScope::kDedupe: add_dedupe(report, catalogue); break;
    case VerifyScope::kCoverage: add_coverage(report, catalogue); break;
    case VerifyScope::kOracle: add_oracle(report, catalogue); break;
    case VerifyScope::kSymmetry: add_symmetry(report); break;
    case VerifyScope::kAll:
      add_lemmas(report);
      for (const auto& t : catalogue.tables()) add_table(report, catalogue, t.id);
      add_dedupe(report, catalogue);
      add_coverage(report, catalogue);
      for (int k : {3, 4, 5}) add_classify(report, catalogue, k);
      if (config.oracle_check) add_oracle(report, catalogue);
      add_symmetry(report);
      break;
  }
  return report;
}

}  // namespace vincular
