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

#include "vincular/enumerate.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "vincular/error.hpp"

namespace vincular {
namespace {

std::vector<std::string> subset(std::uint64_t mask) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < 12; ++i) {
    if (mask & (std::uint64_t{1} << i)) out.push_back(oracle::twelve()[i]);
  }
  return out;
}

PatternSet to_set(const std::vector<std::string>& texts) {
  std::vector<VincularPattern> ps;
  for (const auto& t : texts) ps.push_back(parse_pattern(t));
  return PatternSet(std::move(ps));
}

TEST(Enumerate, EmptySetGivesFactorials) {
  std::uint64_t f = 1;
  for (int n = 1; n <= 10; ++n) {
    f *= static_cast<std::uint64_t>(n);
    EXPECT_EQ(count_avoiders(n, PatternSet()), f);
  }
}

TEST(Enumerate, SingleLetterPatternExcludesEverything) {
  const PatternSet one = PatternSet::parse("1");
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(count_avoiders(n, one), 0u);
}

TEST(Enumerate, RandomSubsetsAgreeWithBruteForce) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const auto texts = subset(rng() % 4096);
    const PatternSet set = to_set(texts);
    for (int n = 1; n <= 7; ++n) {
      ASSERT_EQ(count_avoiders(n, set), oracle::count(n, texts))
          << set.to_string() << " n=" << n;
    }
  }
}

TEST(Enumerate, LongerPatternsAgreeWithBruteForce) {
  const std::vector<std::string> texts = {"2-41-3", "3-14-2"};
  for (int n = 1; n <= 7; ++n) {
    EXPECT_EQ(count_avoiders(n, to_set(texts)), oracle::count(n, texts));
  }
}

TEST(Enumerate, ListingIsLexicographicAndExact) {
  const std::vector<std::string> texts = {"1-23", "21-3"};
  for (int n = 1; n <= 6; ++n) {
    const auto got = list_avoiders(n, to_set(texts));
    const auto expected = oracle::avoiders(n, texts);
    ASSERT_EQ(got.size(), expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      EXPECT_EQ(std::vector<int>(got[i].values().begin(), got[i].values().end()),
                expected[i]);
    }
    EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
  }
}

TEST(Enumerate, VisitorStopsEarly) {
  int seen = 0;
  const bool finished = for_each_avoider(5, PatternSet(), [&](std::span<const int>) {
    return ++seen < 3;
  });
  EXPECT_FALSE(finished);
  EXPECT_EQ(seen, 3);
}

TEST(Enumerate, WorkerCountDoesNotChangeCounts) {
  const PatternSet set = PatternSet::parse("1-23,2-31");
  for (int n = 1; n <= 9; ++n) {
    EXPECT_EQ(count_avoiders(n, set, {1}), count_avoiders(n, set, {4}));
  }
}

// Adding a pattern can only remove avoiders.
TEST(Enumerate, CountsShrinkUnderInclusion) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::uint64_t mask = rng() % 4096;
    const std::uint64_t sub = mask & rng();
    const PatternSet big = to_set(subset(mask));
    const PatternSet small = to_set(subset(sub));
    for (int n = 1; n <= 7; ++n) {
      EXPECT_LE(count_avoiders(n, big), count_avoiders(n, small));
    }
  }
}

TEST(Enumerate, NaiveFilterMatchesPruned) {
  const PatternSet set = PatternSet::parse("1-23,2-13");
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(count_avoiders_naive(n, set), count_avoiders(n, set));
  }
}

TEST(Enumerate, CountingSequenceShortCircuitsZeros) {
  const PatternSet& set = length_three_pattern_set();
  const CountingSequence seq = counting_sequence(9, set);
  ASSERT_EQ(seq.max_length(), 9);
  EXPECT_EQ(seq.at(2), 2u);
  EXPECT_EQ(seq.at(3), 0u);
  for (int n = 1; n <= 9; ++n) EXPECT_EQ(seq.at(n), count_avoiders(n, set));
  EXPECT_EQ(seq.pattern_set, set);
}

TEST(Enumerate, SparseClassAtTwelve) {
  EXPECT_EQ(count_avoiders(12, PatternSet::parse("1-23,2-13,3-12")), 12u);
}

TEST(Enumerate, LengthGuards) {
  const PatternSet s;
  for (int bad : {0, -1, 21}) {
    try {
      count_avoiders(bad, s);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kRange);
    }
  }
  EXPECT_THROW(list_avoiders(13, s), Error);
  EXPECT_THROW(count_avoiders_naive(9, s), Error);
  EXPECT_THROW(counting_sequence(13, s), Error);
}

}  // namespace
}  // namespace vincular
