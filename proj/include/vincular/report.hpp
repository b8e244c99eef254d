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

#ifndef VINCULAR_REPORT_HPP_
#define VINCULAR_REPORT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace vincular {

enum class OutputFormat { kText, kJson, kCsv };

std::string_view to_string(OutputFormat format);
std::optional<OutputFormat> output_format_from_string(std::string_view name);

// VINCULAR_JOBS if set to a positive integer, else the hardware thread count.
unsigned default_workers();

inline constexpr int kMaxOracleRunLength = 10;
inline constexpr int kMaxRunLength = 12;
inline constexpr std::uint64_t kDefaultSeed = 20061;

struct RunConfig {
  int max_n = 9;
  // The n!-filter cross-check covers n <= 8 of any run.
  bool oracle_check = true;
  unsigned workers = default_workers();
  OutputFormat format = OutputFormat::kText;
  std::uint64_t seed = kDefaultSeed;
  std::string data_path;  // empty: embedded tables

  // Throws Error(kRange).
  void validate() const;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

enum class ResultStatus { kPass, kFail, kUnknown, kErratum };

std::string_view to_string(ResultStatus status);
std::optional<ResultStatus> result_status_from_string(std::string_view name);

struct Derivation {
  std::string kind;  // closure, superset, structure, implication, ...
  std::string proposition;
  std::string base;
  std::string added;
  std::optional<bool> verified;
  bool citation_ok = true;
  std::string note;

  friend bool operator==(const Derivation&, const Derivation&) = default;
};

struct ResultEntry {
  std::string id;
  std::vector<std::string> pattern_sets;
  // counts[i][j] = |S_{j+1}| for pattern_sets[i]
  std::vector<std::vector<std::uint64_t>> counts;
  std::string family;  // fitted family, empty if none
  std::string match;   // matched, ambiguous, unknown; empty if not matched
  std::string claimed;
  std::optional<Derivation> derivation;
  ResultStatus status = ResultStatus::kUnknown;
  std::optional<std::string> witness;
  std::vector<std::string> notes;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();

  friend bool operator==(const ResultEntry&, const ResultEntry&) = default;
};

struct Summary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t unknown = 0;
  std::size_t erratum = 0;

  friend bool operator==(const Summary&, const Summary&) = default;
};

struct Report {
  std::string command;
  RunConfig config;
  std::vector<ResultEntry> results;
  Summary summary;

  // Appends and updates the summary.
  void add(ResultEntry entry);
  void append(const Report& other);

  friend bool operator==(const Report&, const Report&) = default;
};

// 0 when nothing failed, 1 otherwise.
int exit_code(const Report& report);

nlohmann::ordered_json to_json(const Report& report);
// Throws Error(kData) on schema violations.
Report report_from_json(const nlohmann::ordered_json& json);

std::string render_text(const Report& report);
std::string render_json(const Report& report);
// id,set_index,patterns,n,count
std::string render_csv(const Report& report);
std::string render(const Report& report, OutputFormat format);

}  // namespace vincular

#endif  // VINCULAR_REPORT_HPP_
