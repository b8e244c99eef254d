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

#ifndef VINCULAR_SYMMETRY_HPP_
#define VINCULAR_SYMMETRY_HPP_

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "vincular/pattern.hpp"
#include "vincular/permutation.hpp"

namespace vincular {

// The group {id, r, c, rc} acting on permutations and patterns. Inversion is
// not part of it: it does not preserve block adjacency.
enum class SymmetryOp { kIdentity, kReverse, kComplement, kReverseComplement };

inline constexpr std::array<SymmetryOp, 4> kSymmetryOps = {
    SymmetryOp::kIdentity, SymmetryOp::kReverse, SymmetryOp::kComplement,
    SymmetryOp::kReverseComplement};

std::string_view to_string(SymmetryOp op);
// `compose(a, b)` applies b first, then a.
SymmetryOp compose(SymmetryOp a, SymmetryOp b);

Permutation apply(SymmetryOp op, const Permutation& perm);
// Reverse reads letters and dashes right to left; complement maps each
// letter l to k+1-l and leaves the dashes in place.
VincularPattern apply(SymmetryOp op, const VincularPattern& pattern);
PatternSet apply(SymmetryOp op, const PatternSet& patterns);

struct SymmetryClass {
  // Smallest member under the canonical ordering: members compare by their
  // sorted list of pattern strings.
  PatternSet canonical;
  // The distinct images among {P, P^r, P^c, P^rc}, canonically ordered.
  std::vector<PatternSet> members;
  // Table label bound from embedded data, when known ("N1", "d17", ...).
  std::string name;
};

SymmetryClass symmetry_class(const PatternSet& patterns);
PatternSet canonical_representative(const PatternSet& patterns);

}  // namespace vincular

#endif  // VINCULAR_SYMMETRY_HPP_
