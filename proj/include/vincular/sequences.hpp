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

#ifndef VINCULAR_SEQUENCES_HPP_
#define VINCULAR_SEQUENCES_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vincular/enumerate.hpp"

namespace vincular {

enum class FamilyKind {
  kConstant,          // c for n >= k
  kLinear,            // n
  kFibonacci,         // 1, 2, 3, 5, 8, ...
  kMotzkin,           // 1, 2, 4, 9, 21, ...
  kPowerOfTwo,        // 2^(n-1)
  kPowerOfTwoPlusOne, // 2^(n-2) + 1
  kOnePlusBinomial,   // 1 + C(n,2)
  kCentralBinomial,   // C(n, ceil(n/2))
};

inline constexpr int kFirstMatchedLength = 3;
inline constexpr int kMinMatchWindow = 7;

std::string_view to_string(FamilyKind kind);
std::optional<FamilyKind> family_kind_from_string(std::string_view name);

struct SequenceFamily {
  FamilyKind kind = FamilyKind::kLinear;
  std::uint64_t constant = 0;    // kConstant only
  std::optional<int> threshold;  // kConstant only: first n of the constant run

  static SequenceFamily constant_from(std::uint64_t c, std::optional<int> k) {
    return {FamilyKind::kConstant, c, k};
  }
  static SequenceFamily of(FamilyKind kind) { return {kind, 0, std::nullopt}; }

  // Smallest n at which the family is defined: 3, or the threshold of a
  // constant family if that is larger.
  int first_index() const;
  // "linear_n", "constant(2, n>=2)", "constant(0)"
  std::string to_string() const;

  friend bool operator==(const SequenceFamily&, const SequenceFamily&) = default;
};

// Throws Error(kRange) for n < first_index().
std::uint64_t family_value(const SequenceFamily& family, int n);

// A claimed family agrees with a fitted one when kinds and constants agree
// and, if the claim names a threshold, the thresholds agree too.
bool claim_agrees(const SequenceFamily& claimed, const SequenceFamily& fitted);

struct SequenceMatch {
  enum class Status { kMatched, kAmbiguous, kUnknown };
  Status status = Status::kUnknown;
  std::vector<SequenceFamily> candidates;

  const SequenceFamily* family() const {
    return status == Status::kMatched ? &candidates.front() : nullptr;
  }
};

std::string_view to_string(SequenceMatch::Status status);

// `counts[i]` is the count for n = i+1. Families are compared on n = 3..N;
// a constant family is fitted with the smallest threshold k <= N-2 such that
// counts agree from k to N. Throws Error(kRange) if N < 7.
SequenceMatch match_sequence(std::span<const std::uint64_t> counts);
SequenceMatch match_sequence(const CountingSequence& sequence);

}  // namespace vincular

#endif  // VINCULAR_SEQUENCES_HPP_
