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

#include "vincular/permutation.hpp"

#include <gtest/gtest.h>

#include "vincular/error.hpp"

namespace vincular {
namespace {

TEST(Permutation, ParsesDigitsAndCommas) {
  EXPECT_EQ(parse_permutation("4213").values().size(), 4u);
  EXPECT_EQ(parse_permutation("4213"), Permutation({4, 2, 1, 3}));
  const Permutation ten = parse_permutation("10,9,8,7,6,5,4,3,2,1");
  EXPECT_EQ(ten, Permutation::decreasing(10));
  EXPECT_EQ(ten.to_string(), "10,9,8,7,6,5,4,3,2,1");
  EXPECT_EQ(Permutation::identity(5).to_string(), "12345");
  EXPECT_TRUE(parse_permutation("").empty());
}

TEST(Permutation, RejectsMalformedText) {
  try {
    parse_permutation("12a");
    FAIL() << "expected a parse error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
    EXPECT_EQ(e.position(), 2u);
  }
  EXPECT_THROW(parse_permutation("1,,2"), Error);
}

TEST(Permutation, RejectsNonPermutations) {
  for (const char* text : {"113", "23", "1240"}) {
    EXPECT_THROW(parse_permutation(text), Error) << text;
  }
  try {
    Permutation({1, 3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kRange);
  }
  std::vector<int> big(21);
  for (int i = 0; i < 21; ++i) big[static_cast<std::size_t>(i)] = i + 1;
  EXPECT_THROW(Permutation{big}, Error);
}

TEST(Permutation, Standardize) {
  const std::vector<int> word = {40, 7, 19, 3};
  EXPECT_EQ(standardize(word), Permutation({4, 2, 3, 1}));
  const std::vector<int> dup = {2, 2};
  EXPECT_THROW(standardize(dup), Error);
}

TEST(Permutation, OrderIsLexicographic) {
  EXPECT_LT(parse_permutation("1243"), parse_permutation("1324"));
  EXPECT_LT(parse_permutation("213"), parse_permutation("231"));
}

}  // namespace
}  // namespace vincular
