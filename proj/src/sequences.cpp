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

#include "vincular/sequences.hpp"

#include <algorithm>
#include <array>

#include "vincular/error.hpp"

namespace vincular {
namespace {

constexpr std::array<FamilyKind, 7> kGrowingKinds = {
    FamilyKind::kLinear,         FamilyKind::kFibonacci,
    FamilyKind::kMotzkin,        FamilyKind::kPowerOfTwo,
    FamilyKind::kPowerOfTwoPlusOne, FamilyKind::kOnePlusBinomial,
    FamilyKind::kCentralBinomial};

// Seeds calibrated once against the brute-force counter: S_n(1-23,2-13,1-32)
// has counts 1, 2, 3, 5, 8, 13 for n = 1..6, so F_1 = 1 and F_2 = 2.
constexpr std::uint64_t kFibonacciFirst = 1;
constexpr std::uint64_t kFibonacciSecond = 2;

// S_n(1-23,12-3,21-3) has counts 1, 2, 4, 9, 21, 51 for n = 1..6, the
// Motzkin numbers M_n with M_0 = M_1 = 1.
constexpr std::uint64_t kMotzkinZero = 1;
constexpr std::uint64_t kMotzkinOne = 1;

std::uint64_t fibonacci(int n) {
  std::uint64_t prev = kFibonacciFirst;
  std::uint64_t cur = kFibonacciSecond;
  if (n == 1) return prev;
  for (int i = 2; i < n; ++i) {
    const std::uint64_t next = prev + cur;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::uint64_t motzkin(int n) {
  std::vector<std::uint64_t> m = {kMotzkinZero, kMotzkinOne};
  for (int i = 2; i <= n; ++i) {
    std::uint64_t next = m[i - 1];
    for (int k = 0; k <= i - 2; ++k) next += m[k] * m[i - 2 - k];
    m.push_back(next);
  }
  return m[static_cast<std::size_t>(n)];
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

}  // namespace

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kConstant:
      return "constant";
    case FamilyKind::kLinear:
      return "linear_n";
    case FamilyKind::kFibonacci:
      return "fibonacci";
    case FamilyKind::kMotzkin:
      return "motzkin";
    case FamilyKind::kPowerOfTwo:
      return "pow2_shift1";
    case FamilyKind::kPowerOfTwoPlusOne:
      return "pow2_shift2_plus1";
    case FamilyKind::kOnePlusBinomial:
      return "one_plus_binom2";
    case FamilyKind::kCentralBinomial:
      return "central_binomial";
  }
  return "?";
}

std::optional<FamilyKind> family_kind_from_string(std::string_view name) {
  for (FamilyKind k : kGrowingKinds) {
    if (to_string(k) == name) return k;
  }
  if (name == to_string(FamilyKind::kConstant)) return FamilyKind::kConstant;
  return std::nullopt;
}

int SequenceFamily::first_index() const {
  if (kind == FamilyKind::kConstant && threshold) {
    return std::max(kFirstMatchedLength, *threshold);
  }
  return kFirstMatchedLength;
}

std::string SequenceFamily::to_string() const {
  std::string out(vincular::to_string(kind));
  if (kind == FamilyKind::kConstant) {
    out += '(' + std::to_string(constant);
    if (threshold) out += ", n>=" + std::to_string(*threshold);
    out += ')';
  }
  return out;
}

std::uint64_t family_value(const SequenceFamily& family, int n) {
  if (n < family.first_index()) {
    throw_range_error(family.to_string() + " is not evaluated at n = " +
                      std::to_string(n));
  }
  switch (family.kind) {
    case FamilyKind::kConstant:
      return family.constant;
    case FamilyKind::kLinear:
      return static_cast<std::uint64_t>(n);
    case FamilyKind::kFibonacci:
      return fibonacci(n);
    case FamilyKind::kMotzkin:
      return motzkin(n);
    case FamilyKind::kPowerOfTwo:
      return std::uint64_t{1} << (n - 1);
    case FamilyKind::kPowerOfTwoPlusOne:
      return (std::uint64_t{1} << (n - 2)) + 1;
    case FamilyKind::kOnePlusBinomial:
      return 1 + binomial(n, 2);
    case FamilyKind::kCentralBinomial:
      return binomial(n, (n + 1) / 2);
  }
  return 0;
}

bool claim_agrees(const SequenceFamily& claimed, const SequenceFamily& fitted) {
  if (claimed.kind != fitted.kind) return false;
  if (claimed.kind != FamilyKind::kConstant) return true;
  if (claimed.constant != fitted.constant) return false;
  return !claimed.threshold || claimed.threshold == fitted.threshold;
}

std::string_view to_string(SequenceMatch::Status status) {
  switch (status) {
    case SequenceMatch::Status::kMatched:
      return "matched";
    case SequenceMatch::Status::kAmbiguous:
      return "ambiguous";
    case SequenceMatch::Status::kUnknown:
      return "unknown";
  }
  return "?";
}

SequenceMatch match_sequence(std::span<const std::uint64_t> counts) {
  const int max_n = static_cast<int>(counts.size());
  if (max_n < kMinMatchWindow) {
    throw_range_error("sequence window too short: need n up to at least " +
                      std::to_string(kMinMatchWindow) + ", got " +
                      std::to_string(max_n));
  }
  auto at = [&](int n) { return counts[static_cast<std::size_t>(n - 1)]; };

  SequenceMatch match;
  for (FamilyKind kind : kGrowingKinds) {
    const SequenceFamily family = SequenceFamily::of(kind);
    bool agrees = true;
    for (int n = kFirstMatchedLength; n <= max_n && agrees; ++n) {
      agrees = family_value(family, n) == at(n);
    }
    if (agrees) match.candidates.push_back(family);
  }

  const std::uint64_t tail = at(max_n);
  int start = max_n;
  while (start > 1 && at(start - 1) == tail) --start;
  if (start <= max_n - 2) {
    match.candidates.push_back(SequenceFamily::constant_from(tail, start));
  }

  if (match.candidates.size() == 1) {
    match.status = SequenceMatch::Status::kMatched;
  } else if (match.candidates.size() > 1) {
    match.status = SequenceMatch::Status::kAmbiguous;
  }
  return match;
}

SequenceMatch match_sequence(const CountingSequence& sequence) {
  return match_sequence(sequence.counts);
}

}  // namespace vincular
