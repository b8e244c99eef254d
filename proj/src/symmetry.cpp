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

#include <algorithm>

namespace vincular {
namespace {

bool flips_positions(SymmetryOp op) {
  return op == SymmetryOp::kReverse || op == SymmetryOp::kReverseComplement;
}

bool flips_values(SymmetryOp op) {
  return op == SymmetryOp::kComplement || op == SymmetryOp::kReverseComplement;
}

}  // namespace

std::string_view to_string(SymmetryOp op) {
  switch (op) {
    case SymmetryOp::kIdentity:
      return "identity";
    case SymmetryOp::kReverse:
      return "reverse";
    case SymmetryOp::kComplement:
      return "complement";
    case SymmetryOp::kReverseComplement:
      return "reverse_complement";
  }
  return "?";
}

SymmetryOp compose(SymmetryOp a, SymmetryOp b) {
  const bool r = flips_positions(a) != flips_positions(b);
  const bool c = flips_values(a) != flips_values(b);
  if (r && c) return SymmetryOp::kReverseComplement;
  if (r) return SymmetryOp::kReverse;
  if (c) return SymmetryOp::kComplement;
  return SymmetryOp::kIdentity;
}

Permutation apply(SymmetryOp op, const Permutation& perm) {
  std::vector<int> values(perm.values().begin(), perm.values().end());
  const int n = static_cast<int>(values.size());
  if (flips_positions(op)) std::reverse(values.begin(), values.end());
  if (flips_values(op)) {
    for (int& v : values) v = n + 1 - v;
  }
  return Permutation(std::move(values));
}

VincularPattern apply(SymmetryOp op, const VincularPattern& pattern) {
  std::vector<int> letters(pattern.letters().begin(), pattern.letters().end());
  std::vector<int> blocks(pattern.type().begin(), pattern.type().end());
  const int k = static_cast<int>(letters.size());
  if (flips_positions(op)) {
    std::reverse(letters.begin(), letters.end());
    std::reverse(blocks.begin(), blocks.end());
  }
  if (flips_values(op)) {
    for (int& v : letters) v = k + 1 - v;
  }
  return VincularPattern(std::move(letters), std::move(blocks));
}

PatternSet apply(SymmetryOp op, const PatternSet& patterns) {
  std::vector<VincularPattern> images;
  images.reserve(patterns.size());
  for (const auto& p : patterns) images.push_back(apply(op, p));
  return PatternSet(std::move(images));
}

SymmetryClass symmetry_class(const PatternSet& patterns) {
  SymmetryClass out;
  for (SymmetryOp op : kSymmetryOps) out.members.push_back(apply(op, patterns));
  // PatternSet ordering is lexicographic over text-sorted patterns, which is
  // exactly the ordering of the serialized string lists.
  std::sort(out.members.begin(), out.members.end());
  out.members.erase(std::unique(out.members.begin(), out.members.end()),
                    out.members.end());
  out.canonical = out.members.front();
  return out;
}

PatternSet canonical_representative(const PatternSet& patterns) {
  return symmetry_class(patterns).canonical;
}

}  // namespace vincular
