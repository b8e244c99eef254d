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

#include "vincular/symmetry.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "oracle.hpp"
#include "vincular/classify.hpp"
#include "vincular/error.hpp"

namespace vincular {
namespace {

std::vector<int> as_vector(const Permutation& p) {
  return {p.values().begin(), p.values().end()};
}

TEST(Symmetry, PatternImagesMatchStringEdits) {
  std::vector<std::string> texts = oracle::twelve();
  texts.insert(texts.end(), {"216-4-53", "1-2-3", "3142", "2-41-3"});
  for (const auto& t : texts) {
    const VincularPattern p = parse_pattern(t);
    EXPECT_EQ(apply(SymmetryOp::kReverse, p).to_string(), oracle::reverse(t));
    EXPECT_EQ(apply(SymmetryOp::kComplement, p).to_string(),
              oracle::complement(t));
    EXPECT_EQ(apply(SymmetryOp::kReverseComplement, p).to_string(),
              oracle::complement(oracle::reverse(t)));
    EXPECT_EQ(apply(SymmetryOp::kIdentity, p), p);
  }
  EXPECT_EQ(apply(SymmetryOp::kReverse, parse_pattern("1-23")).to_string(), "32-1");
  EXPECT_EQ(apply(SymmetryOp::kComplement, parse_pattern("1-23")).to_string(), "3-21");
}

TEST(Symmetry, PermutationImages) {
  const Permutation p = parse_permutation("13254");
  EXPECT_EQ(apply(SymmetryOp::kReverse, p).to_string(), "45231");
  EXPECT_EQ(apply(SymmetryOp::kComplement, p).to_string(), "53412");
  EXPECT_EQ(as_vector(apply(SymmetryOp::kComplement, p)),
            oracle::complement(as_vector(p)));
  EXPECT_EQ(as_vector(apply(SymmetryOp::kReverseComplement, p)),
            oracle::complement(oracle::reverse(as_vector(p))));
}

TEST(Symmetry, KleinFourGroupLaws) {
  const Permutation pi = parse_permutation("3614725");
  const VincularPattern p = parse_pattern("31-42");
  for (SymmetryOp a : kSymmetryOps) {
    EXPECT_EQ(compose(a, a), SymmetryOp::kIdentity);
    EXPECT_EQ(compose(a, SymmetryOp::kIdentity), a);
    for (SymmetryOp b : kSymmetryOps) {
      EXPECT_EQ(compose(a, b), compose(b, a));
      EXPECT_EQ(apply(compose(a, b), pi), apply(a, apply(b, pi)));
      EXPECT_EQ(apply(compose(a, b), p), apply(a, apply(b, p)));
      for (SymmetryOp c : kSymmetryOps) {
        EXPECT_EQ(compose(a, compose(b, c)), compose(compose(a, b), c));
      }
    }
  }
}

// pi contains p iff op(pi) contains op(p).
TEST(Symmetry, ContainmentIsEquivariant) {
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    do {
      const Permutation pi(w);
      for (const auto& p : length_three_patterns()) {
        for (SymmetryOp op : kSymmetryOps) {
          ASSERT_EQ(contains(pi, p), contains(apply(op, pi), apply(op, p)));
        }
      }
    } while (std::next_permutation(w.begin(), w.end()));
  }
}

TEST(Symmetry, ClassMembersAndCanonical) {
  const PatternSet p = PatternSet::parse("1-23,2-13,3-12");
  const SymmetryClass cls = symmetry_class(p);
  EXPECT_TRUE(std::is_sorted(cls.members.begin(), cls.members.end()));
  EXPECT_EQ(cls.canonical, cls.members.front());
  EXPECT_NE(std::find(cls.members.begin(), cls.members.end(), p),
            cls.members.end());
  for (SymmetryOp op : kSymmetryOps) {
    EXPECT_EQ(canonical_representative(apply(op, p)), cls.canonical);
  }
  // The whole set and the empty set are fixed by every operation.
  EXPECT_EQ(symmetry_class(length_three_pattern_set()).members.size(), 1u);
  EXPECT_EQ(symmetry_class(PatternSet()).members.size(), 1u);
}

TEST(Symmetry, PartitionMatchesOrbitCount) {
  for (int k = 1; k <= 4; ++k) {
    const auto classes = partition_into_symmetry_classes(k);
    EXPECT_EQ(classes.size(), oracle::orbit_count(k)) << "k=" << k;
    std::size_t members = 0;
    for (const auto& c : classes) members += c.members.size();
    const std::size_t binom[] = {1, 12, 66, 220, 495};
    EXPECT_EQ(members, binom[k]);
  }
}

TEST(Symmetry, ThreePatternClassCount) {
  // Tables 1 and 2 list 35 + 20 representatives.
  EXPECT_EQ(partition_into_symmetry_classes(3).size(), 35u + 20u);
}

TEST(Symmetry, PartitionCoversSixSubsets) {
  std::size_t members = 0;
  for (const auto& c : partition_into_symmetry_classes(6)) {
    members += c.members.size();
  }
  EXPECT_EQ(members, 924u);
  EXPECT_THROW(partition_into_symmetry_classes(0), Error);
  EXPECT_THROW(partition_into_symmetry_classes(7), Error);
}

}  // namespace
}  // namespace vincular
