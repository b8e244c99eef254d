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

#ifndef VINCULAR_COMMANDS_HPP_
#define VINCULAR_COMMANDS_HPP_

#include <optional>
#include <string_view>

#include "vincular/pattern.hpp"
#include "vincular/report.hpp"
#include "vincular/tables.hpp"

namespace vincular {

// Each command validates the config, does its work and returns a report.
// Errors surface as vincular::Error.

// Containment of one pattern in one permutation, with all occurrences.
Report run_check(const RunConfig& config, std::string_view permutation,
                 std::string_view pattern);
// |S_n(P)| for a single n, or for 1..max_n with a family match.
Report run_count(const RunConfig& config, const PatternSet& patterns,
                 std::optional<int> n = std::nullopt);
Report run_list(const RunConfig& config, const PatternSet& patterns, int n);
// Symmetry classes of k-subsets of the twelve length-3 patterns.
Report run_classes(const RunConfig& config, int k);
Report run_classify(const RunConfig& config, int k);

enum class VerifyScope {
  kLemmas,
  kTable,
  kDedupe,
  kCoverage,
  kOracle,
  kSymmetry,
  kAll,
};

std::string_view to_string(VerifyScope scope);
std::optional<VerifyScope> verify_scope_from_string(std::string_view name);

// `table_id` is used by VerifyScope::kTable only.
Report run_verify(const RunConfig& config, VerifyScope scope,
                  int table_id = 0);

// Embedded tables, or the file named by config.data_path.
TableCatalogue load_catalogue(const RunConfig& config);

inline constexpr int kRandomOracleSets = 200;
inline constexpr int kRandomSymmetrySets = 100;
inline constexpr int kRandomSuiteLength = 8;
inline constexpr std::size_t kMaxListedAvoiders = 100000;

}  // namespace vincular

#endif  // VINCULAR_COMMANDS_HPP_
