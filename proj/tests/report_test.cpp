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

#include "vincular/report.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>

#include "vincular/commands.hpp"
#include "vincular/error.hpp"

namespace vincular {
namespace {

RunConfig config(unsigned workers = 1) {
  RunConfig c;
  c.workers = workers;
  return c;
}

TEST(Report, JsonRoundTrip) {
  const Report reports[] = {
      run_check(config(), "153426", "32-14"),
      run_count(config(), PatternSet::parse("1-23,2-13,3-12")),
      run_count(config(), PatternSet::parse("1-23"), 5),
      run_verify(config(), VerifyScope::kLemmas),
      run_verify(config(), VerifyScope::kTable, 7),
      run_verify(config(), VerifyScope::kDedupe),
  };
  for (const Report& r : reports) {
    const std::string text = render_json(r);
    const Report back = report_from_json(nlohmann::ordered_json::parse(text));
    EXPECT_EQ(back, r) << r.command;
    EXPECT_EQ(render_json(back), text);
  }
}

TEST(Report, SameConfigSameBytes) {
  RunConfig c = config();
  c.seed = 99;
  const std::string a = render_json(run_verify(c, VerifyScope::kSymmetry));
  const std::string b = render_json(run_verify(c, VerifyScope::kSymmetry));
  EXPECT_EQ(a, b);
}

TEST(Report, WorkersDoNotChangeResults) {
  const Report one = run_verify(config(1), VerifyScope::kTable, 3);
  const Report four = run_verify(config(4), VerifyScope::kTable, 3);
  EXPECT_EQ(one.results, four.results);
  EXPECT_EQ(one.summary, four.summary);
}

TEST(Report, SchemaFieldNames) {
  const auto j = to_json(run_count(config(), PatternSet::parse("1-23,2-13,3-12")));
  for (const char* key : {"command", "config", "results", "summary"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  for (const char* key : {"pass", "fail", "unknown"}) {
    EXPECT_TRUE(j["summary"].contains(key)) << key;
  }
  const auto& e = j["results"][0];
  for (const char* key :
       {"id", "pattern_sets", "counts", "family", "derivation", "status"}) {
    EXPECT_TRUE(e.contains(key)) << key;
  }
  EXPECT_EQ(e["family"], "linear_n");
}

TEST(Report, RejectsBadSchema) {
  auto j = to_json(run_check(config(), "12", "1-23"));
  j["results"][0]["status"] = "maybe";
  EXPECT_THROW(report_from_json(j), Error);
  EXPECT_THROW(report_from_json(nlohmann::ordered_json::object()), Error);
}

TEST(Report, CsvOneRowPerLength) {
  const Report r = run_count(config(), PatternSet::parse("1-23,2-13,3-12"));
  const std::string csv = render_csv(r);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "id,set_index,patterns,n,count");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 9);
  EXPECT_NE(csv.find("count,0,\"{1-23,2-13,3-12}\",9,9\n"), std::string::npos);
}

TEST(Report, TextSummaryLine) {
  const std::string text = render_text(run_verify(config(), VerifyScope::kDedupe));
  EXPECT_NE(text.find("summary: 2 pass, 1 fail, 0 unknown"), std::string::npos);
  EXPECT_NE(text.find("[fail] dedupe7.box_rows"), std::string::npos);
}

TEST(Report, ConfigValidation) {
  RunConfig c = config();
  c.max_n = 10;
  EXPECT_NO_THROW(c.validate());
  c.max_n = 11;
  EXPECT_THROW(c.validate(), Error);
  c.oracle_check = false;
  EXPECT_NO_THROW(c.validate());
  c.max_n = 13;
  EXPECT_THROW(c.validate(), Error);
  c.max_n = 0;
  EXPECT_THROW(c.validate(), Error);
}

TEST(Report, JobsFromEnvironment) {
  ::setenv("VINCULAR_JOBS", "3", 1);
  EXPECT_EQ(default_workers(), 3u);
  ::setenv("VINCULAR_JOBS", "zero", 1);
  EXPECT_GE(default_workers(), 1u);
  ::unsetenv("VINCULAR_JOBS");
}

TEST(Report, ExitCodeAndSummary) {
  Report r;
  ResultEntry ok;
  ok.status = ResultStatus::kPass;
  r.add(ok);
  ResultEntry unknown;
  unknown.status = ResultStatus::kUnknown;
  r.add(unknown);
  EXPECT_EQ(exit_code(r), 0);
  ResultEntry bad;
  bad.status = ResultStatus::kFail;
  r.add(bad);
  EXPECT_EQ(exit_code(r), 1);
  EXPECT_EQ(r.summary, (Summary{1, 1, 1, 0}));
}

TEST(Report, FormatNames) {
  for (auto f : {OutputFormat::kText, OutputFormat::kJson, OutputFormat::kCsv}) {
    EXPECT_EQ(output_format_from_string(to_string(f)), f);
  }
  EXPECT_FALSE(output_format_from_string("xml"));
}

}  // namespace
}  // namespace vincular
