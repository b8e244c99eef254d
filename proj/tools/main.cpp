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

// Command-line front end. Talks to the library only through the C API.

#include <cstdint>
#include <cstdio>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vincular/vincular.h"

namespace {

constexpr int kExitUsage = 2;

struct SessionDeleter {
  void operator()(vin_session* s) const { vin_session_free(s); }
};
using Session = std::unique_ptr<vin_session, SessionDeleter>;

int finish(vin_session* session, vin_status status) {
  if (status == VIN_OK || status == VIN_VERIFY_FAILED) {
    std::fputs(vin_session_output(session), stdout);
    return status == VIN_OK ? 0 : 1;
  }
  std::fprintf(stderr, "error: %s\n", vin_session_last_error(session));
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumerate permutations avoiding vincular patterns of length 3"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(vin_version()));

  std::optional<int> max_n;
  std::optional<unsigned> jobs;
  std::optional<std::uint64_t> seed;
  std::string format = "text";
  std::string data;
  bool no_oracle = false;
  app.add_option("--max-n", max_n, "Largest length to enumerate (default 9)");
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--jobs", jobs, "Worker threads (default: VINCULAR_JOBS or all cores)");
  app.add_option("--seed", seed, "Seed for the randomized suites");
  app.add_option("--data", data, "Table data file instead of the embedded copy");
  app.add_flag("--no-oracle", no_oracle, "Skip the brute-force cross-check");

  std::string perm, pattern;
  auto* check = app.add_subcommand("check", "Test one permutation for a pattern");
  check->add_option("permutation", perm, "e.g. 153426 or 10,2,1,...")->required();
  check->add_option("pattern", pattern, "e.g. 32-14")->required();

  std::string patterns;
  std::optional<int> n;
  auto* count = app.add_subcommand("count", "Count avoiders for one n or 1..max-n");
  count->add_option("--patterns", patterns, "Comma-separated patterns")->required();
  count->add_option("--n", n, "Single length");

  int list_n = 0;
  auto* list = app.add_subcommand("list", "List avoiders of one length");
  list->add_option("--patterns", patterns, "Comma-separated patterns")->required();
  list->add_option("--n", list_n, "Length")->required();

  int k = 3;
  auto* classes = app.add_subcommand("classes", "Symmetry classes of k-subsets");
  classes->add_option("--k", k, "Subset size 1..6");
  auto* classify = app.add_subcommand("classify", "Count and match every class");
  classify->add_option("--k", k, "Subset size 3..6");

  std::string scope;
  std::optional<int> table;
  auto* verify = app.add_subcommand("verify", "Verify lemmas and tables");
  verify->add_option("scope", scope)
      ->required()
      ->check(CLI::IsMember(
          {"lemmas", "table", "dedupe7", "coverage", "oracle", "symmetry", "all"}));
  verify->add_option("id", table, "Table id for 'verify table'");
  verify->add_option("--table", table, "Table id for 'verify table'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  Session session(vin_session_new());
  if (!session) {
    std::fprintf(stderr, "error: %s\n", vin_last_error());
    return kExitUsage;
  }
  vin_session* s = session.get();
  vin_status status = VIN_OK;
  auto apply = [&status](vin_status st) {
    if (status == VIN_OK) status = st;
  };
  if (max_n) apply(vin_session_set_max_n(s, *max_n));
  if (jobs) apply(vin_session_set_jobs(s, *jobs));
  if (seed) apply(vin_session_set_seed(s, *seed));
  apply(vin_session_set_format(s, format.c_str()));
  apply(vin_session_set_oracle(s, no_oracle ? 0 : 1));
  if (!data.empty()) apply(vin_session_set_data_path(s, data.c_str()));
  if (status != VIN_OK) return finish(s, status);

  if (check->parsed()) {
    status = vin_run_check(s, perm.c_str(), pattern.c_str());
  } else if (count->parsed()) {
    status = vin_run_count(s, patterns.c_str(), n.value_or(0));
  } else if (list->parsed()) {
    status = vin_run_list(s, patterns.c_str(), list_n);
  } else if (classes->parsed()) {
    status = vin_run_classes(s, k);
  } else if (classify->parsed()) {
    status = vin_run_classify(s, k);
  } else {
    if (scope == "table" && !table) {
      std::fprintf(stderr, "error: verify table needs a table id\n");
      return kExitUsage;
    }
    status = vin_run_verify(s, scope.c_str(), table.value_or(0));
  }
  return finish(s, status);
}
