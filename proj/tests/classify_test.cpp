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

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "vincular/error.hpp"

namespace vincular {
namespace {

const TableCatalogue& cat() { return TableCatalogue::embedded(); }

const ClassResult* find_named(const ClassificationReport& r,
                              const std::string& name) {
  for (const auto& c : r.classes) {
    if (c.symmetry.name == name) return &c;
  }
  return nullptr;
}

TEST(Classify, PartitionCounts) {
  EXPECT_EQ(partition_into_symmetry_classes(3).size(), 55u);
  EXPECT_EQ(partition_into_symmetry_classes(4).size(), oracle::orbit_count(4));
  EXPECT_EQ(partition_into_symmetry_classes(5).size(), oracle::orbit_count(5));
  for (const auto& cls : partition_into_symmetry_classes(3)) {
    for (const auto& m : cls.members) EXPECT_LE(cls.canonical, m);
  }
}

TEST(Classify, ThreePatternFamilies) {
  const ClassificationReport r = classify_all(3, 9, {}, &cat());
  EXPECT_EQ(r.classes.size(), 55u);
  EXPECT_EQ(r.subsets_covered(), 220u);
  const std::pair<const char*, FamilyKind> expected[] = {
      {"N1", FamilyKind::kLinear},
      {"A1", FamilyKind::kPowerOfTwo},
      {"F1", FamilyKind::kFibonacci},
      {"B1", FamilyKind::kCentralBinomial},
  };
  for (const auto& [name, kind] : expected) {
    const ClassResult* c = find_named(r, name);
    ASSERT_NE(c, nullptr) << name;
    ASSERT_NE(c->match.family(), nullptr) << name;
    EXPECT_EQ(c->match.family()->kind, kind) << name;
    EXPECT_TRUE(c->oracle_checked);
    EXPECT_TRUE(c->oracle_agrees);
  }
}

TEST(Classify, FourAndFivePatternExamples) {
  const ClassificationReport four = classify_all(4, 9, {}, &cat());
  const ClassResult* d1 = find_named(four, "d1");
  ASSERT_NE(d1, nullptr);
  EXPECT_EQ(d1->match.family()->kind, FamilyKind::kLinear);
  EXPECT_EQ(four.subsets_covered(), 495u);

  const ClassificationReport five = classify_all(5, 9, {false, false}, &cat());
  EXPECT_EQ(five.subsets_covered(), 792u);
  const PatternSet o1_plus = cat().named_set("O1").with(parse_pattern("21-3"));
  const PatternSet canonical = canonical_representative(o1_plus);
  bool found = false;
  for (const auto& c : five.classes) {
    if (c.symmetry.canonical != canonical) continue;
    found = true;
    ASSERT_NE(c.match.family(), nullptr);
    EXPECT_EQ(c.match.family()->kind, FamilyKind::kConstant);
    EXPECT_EQ(c.match.family()->constant, 0u);
    ASSERT_TRUE(c.zero_from);
    EXPECT_LE(*c.zero_from, 9);
  }
  EXPECT_TRUE(found);
}

TEST(Classify, Guards) {
  EXPECT_THROW(classify_all(2, 9), Error);
  EXPECT_THROW(classify_all(3, 6), Error);
  EXPECT_THROW(classify_all(3, 11), Error);
  EXPECT_THROW(verify_table(cat(), 42, 9), Error);
}

TEST(Classify, DerivedRowsPass) {
  const TableVerification t3 = verify_table(cat(), 3, 9);
  EXPECT_TRUE(t3.passed());
  EXPECT_EQ(t3.rows_passed(), 38u);
  for (const auto& row : t3.rows) {
    for (const auto& s : row.sets) {
      ASSERT_TRUE(s.closure) << row.row->label;
      EXPECT_TRUE(s.closure->holds);
      EXPECT_TRUE(s.union_ok);
      EXPECT_TRUE(s.base_counts_equal);
    }
  }
}

TEST(Classify, CitationMismatchIsReportedNotFailed) {
  const TableVerification t10 = verify_table(cat(), 10, 9);
  EXPECT_TRUE(t10.passed());
  std::size_t mismatches = 0;
  for (const auto& row : t10.rows) {
    if (!row.citation_ok) {
      ++mismatches;
      EXPECT_FALSE(row.citation_note.empty());
    }
  }
  EXPECT_EQ(mismatches, 1u);
}

TEST(Classify, DocumentedErratumIsReproduced) {
  const TableVerification t11 = verify_table(cat(), 11, 9);
  EXPECT_TRUE(t11.passed());
  for (const auto& row : t11.rows) {
    if (row.row->erratum.empty()) {
      EXPECT_TRUE(row.sets_agree()) << row.row->label;
      continue;
    }
    EXPECT_FALSE(row.sets_agree());
    for (const auto& s : row.sets) {
      ASSERT_TRUE(s.zero_from);
      EXPECT_EQ(*s.zero_from, 5);
    }
  }
}

TEST(Classify, ZeroRowsStayZero) {
  const TableVerification t8 = verify_table(cat(), 8, 9);
  EXPECT_TRUE(t8.passed());
  for (const auto& row : t8.rows) {
    for (const auto& s : row.sets) {
      ASSERT_TRUE(s.zero_from) << row.row->label;
      for (int n = *s.zero_from; n <= 9; ++n) EXPECT_EQ(s.sequence.at(n), 0u);
    }
  }
}

TEST(Classify, BrokenClaimFails) {
  const auto c = TableCatalogue::from_json_text(
      R"({"format_version": 1, "tables": [{"id": 1, "arity": 3, "rows": [
        {"name": "X1", "patterns": ["1-23", "2-13", "3-12"], "family": {"kind": "fibonacci"}},
        {"name": "X2", "patterns": ["1-23", "2-13"], "family": {"kind": "fibonacci"}}]}]})");
  const TableVerification tv = verify_table(c, 1, 8);
  EXPECT_FALSE(tv.passed());
  EXPECT_EQ(tv.rows_passed(), 0u);
  const auto failures = tv.rows[0].sets[0].failures();
  ASSERT_EQ(failures.size(), 1u);
  EXPECT_FALSE(tv.rows[1].sets[0].arity_ok);
}

TEST(Classify, DedupeCounts) {
  const DedupeResult d = dedupe_cross_product_classes(cat());
  EXPECT_EQ(d.raw, 52u);
  EXPECT_EQ(d.distinct, 42u);
  EXPECT_EQ(d.duplicate_box_rows, (std::set<int>{3, 4}));
  EXPECT_FALSE(d.duplicates_only_in(3));
  std::size_t extra = 0;
  for (const auto& g : d.duplicates) extra += g.members.size() - 1;
  EXPECT_EQ(d.raw - extra, d.distinct);
}

TEST(Classify, Coverage) {
  const int three[] = {1, 2};
  const CoverageResult c3 = table_coverage(cat(), 3, three);
  EXPECT_TRUE(c3.complete());
  EXPECT_EQ(c3.classes, 55u);
  EXPECT_EQ(c3.covered, 55u);
  EXPECT_TRUE(c3.listed_twice.empty());

  const int four[] = {3, 4, 5, 6, 7};
  const CoverageResult c4 = table_coverage(cat(), 4, four);
  EXPECT_TRUE(c4.complete());
  EXPECT_EQ(c4.classes, 135u);

  const int wrong[] = {1, 3};
  EXPECT_FALSE(table_coverage(cat(), 3, wrong).wrong_arity.empty());
}

}  // namespace
}  // namespace vincular
