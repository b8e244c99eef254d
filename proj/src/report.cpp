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

#include <cstdlib>
#include <sstream>
#include <thread>

#include "vincular/error.hpp"

namespace vincular {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::string_view kFormatNames[] = {"text", "json", "csv"};
constexpr std::string_view kStatusNames[] = {"pass", "fail", "unknown",
                                             "erratum"};

[[noreturn]] void schema_error(const std::string& what) {
  throw Error(ErrorCode::kData, "report: " + what);
}

Json config_json(const RunConfig& c) {
  return Json{{"max_n", c.max_n},
              {"oracle_check", c.oracle_check},
              {"workers", c.workers},
              {"format", to_string(c.format)},
              {"seed", c.seed},
              {"data_path", c.data_path}};
}

RunConfig config_from_json(const Json& j) {
  RunConfig c;
  c.max_n = j.at("max_n").get<int>();
  c.oracle_check = j.at("oracle_check").get<bool>();
  c.workers = j.at("workers").get<unsigned>();
  const auto format = output_format_from_string(j.at("format").get<std::string>());
  if (!format) schema_error("unknown format");
  c.format = *format;
  c.seed = j.at("seed").get<std::uint64_t>();
  c.data_path = j.at("data_path").get<std::string>();
  return c;
}

Json derivation_json(const Derivation& d) {
  Json j{{"kind", d.kind},
         {"proposition", d.proposition},
         {"base", d.base},
         {"added", d.added}};
  j["verified"] = d.verified ? Json(*d.verified) : Json(nullptr);
  j["citation_ok"] = d.citation_ok;
  j["note"] = d.note;
  return j;
}

Derivation derivation_from_json(const Json& j) {
  Derivation d;
  d.kind = j.at("kind").get<std::string>();
  d.proposition = j.at("proposition").get<std::string>();
  d.base = j.at("base").get<std::string>();
  d.added = j.at("added").get<std::string>();
  if (!j.at("verified").is_null()) d.verified = j["verified"].get<bool>();
  d.citation_ok = j.at("citation_ok").get<bool>();
  d.note = j.at("note").get<std::string>();
  return d;
}

Json entry_json(const ResultEntry& e) {
  Json j{{"id", e.id},
         {"pattern_sets", e.pattern_sets},
         {"counts", e.counts},
         {"family", e.family},
         {"match", e.match},
         {"claimed", e.claimed}};
  j["derivation"] =
      e.derivation ? derivation_json(*e.derivation) : Json(nullptr);
  j["status"] = to_string(e.status);
  if (e.witness) j["witness"] = *e.witness;
  j["notes"] = e.notes;
  j["details"] = e.details;
  return j;
}

ResultEntry entry_from_json(const Json& j) {
  ResultEntry e;
  e.id = j.at("id").get<std::string>();
  e.pattern_sets = j.at("pattern_sets").get<std::vector<std::string>>();
  e.counts = j.at("counts").get<std::vector<std::vector<std::uint64_t>>>();
  e.family = j.at("family").get<std::string>();
  e.match = j.at("match").get<std::string>();
  e.claimed = j.at("claimed").get<std::string>();
  if (!j.at("derivation").is_null()) {
    e.derivation = derivation_from_json(j["derivation"]);
  }
  const auto status =
      result_status_from_string(j.at("status").get<std::string>());
  if (!status) schema_error("unknown status in result " + e.id);
  e.status = *status;
  if (j.contains("witness")) e.witness = j["witness"].get<std::string>();
  e.notes = j.at("notes").get<std::vector<std::string>>();
  e.details = j.at("details");
  return e;
}

std::string join_counts(const std::vector<std::uint64_t>& counts) {
  std::string out;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(counts[i]);
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string_view to_string(OutputFormat format) {
  return kFormatNames[static_cast<int>(format)];
}

std::optional<OutputFormat> output_format_from_string(std::string_view name) {
  for (int i = 0; i < 3; ++i) {
    if (kFormatNames[i] == name) return static_cast<OutputFormat>(i);
  }
  return std::nullopt;
}

unsigned default_workers() {
  if (const char* env = std::getenv("VINCULAR_JOBS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 1024) {
      return static_cast<unsigned>(v);
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void RunConfig::validate() const {
  const int limit = oracle_check ? kMaxOracleRunLength : kMaxRunLength;
  if (max_n < 1 || max_n > limit) {
    throw_range_error("max_n " + std::to_string(max_n) + " outside 1.." +
                      std::to_string(limit) +
                      (oracle_check ? " with the oracle check on" : ""));
  }
  if (workers < 1) throw_range_error("workers must be at least 1");
}

std::string_view to_string(ResultStatus status) {
  return kStatusNames[static_cast<int>(status)];
}

std::optional<ResultStatus> result_status_from_string(std::string_view name) {
  for (int i = 0; i < 4; ++i) {
    if (kStatusNames[i] == name) return static_cast<ResultStatus>(i);
  }
  return std::nullopt;
}

void Report::add(ResultEntry entry) {
  switch (entry.status) {
    case ResultStatus::kPass: ++summary.pass; break;
    case ResultStatus::kFail: ++summary.fail; break;
    case ResultStatus::kUnknown: ++summary.unknown; break;
    case ResultStatus::kErratum: ++summary.erratum; break;
  }
  results.push_back(std::move(entry));
}

void Report::append(const Report& other) {
  for (const auto& e : other.results) add(e);
}

int exit_code(const Report& report) { return report.summary.fail == 0 ? 0 : 1; }

Json to_json(const Report& report) {
  Json results = Json::array();
  for (const auto& e : report.results) results.push_back(entry_json(e));
  const Summary& s = report.summary;
  return Json{{"command", report.command},
              {"config", config_json(report.config)},
              {"results", std::move(results)},
              {"summary",
               {{"pass", s.pass},
                {"fail", s.fail},
                {"unknown", s.unknown},
                {"erratum", s.erratum}}}};
}

Report report_from_json(const Json& json) {
  try {
    Report r;
    r.command = json.at("command").get<std::string>();
    r.config = config_from_json(json.at("config"));
    for (const auto& e : json.at("results")) r.results.push_back(entry_from_json(e));
    const auto& s = json.at("summary");
    r.summary = {s.at("pass").get<std::size_t>(), s.at("fail").get<std::size_t>(),
                 s.at("unknown").get<std::size_t>(),
                 s.at("erratum").get<std::size_t>()};
    return r;
  } catch (const nlohmann::json::exception& e) {
    schema_error(e.what());
  }
}

std::string render_text(const Report& report) {
  std::ostringstream out;
  const RunConfig& c = report.config;
  out << report.command << "  (max_n " << c.max_n << ", oracle "
      << (c.oracle_check ? "on" : "off") << ", jobs " << c.workers << ")\n";
  for (const auto& e : report.results) {
    out << '[' << to_string(e.status) << "] " << e.id;
    if (!e.pattern_sets.empty()) {
      out << "  " << e.pattern_sets.front();
      if (e.pattern_sets.size() > 1) {
        out << " (+" << e.pattern_sets.size() - 1 << " more)";
      }
    }
    if (!e.family.empty()) out << "  family " << e.family;
    if (!e.match.empty() && e.match != "matched") out << "  " << e.match;
    if (!e.claimed.empty()) out << "  claimed " << e.claimed;
    if (e.derivation && !e.derivation->proposition.empty()) {
      out << "  via " << e.derivation->proposition;
    }
    if (e.witness) out << "  witness " << *e.witness;
    out << '\n';
    if (e.counts.size() == 1) out << "    counts " << join_counts(e.counts[0]) << '\n';
    for (const auto& note : e.notes) out << "    " << note << '\n';
    if (e.details.contains("avoiders")) {
      for (const auto& p : e.details["avoiders"]) {
        out << "    " << p.get<std::string>() << '\n';
      }
    }
  }
  const Summary& s = report.summary;
  out << "summary: " << s.pass << " pass, " << s.fail << " fail, " << s.unknown
      << " unknown";
  if (s.erratum > 0) out << ", " << s.erratum << " erratum";
  out << '\n';
  return out.str();
}

std::string render_json(const Report& report) {
  return to_json(report).dump(2) + "\n";
}

std::string render_csv(const Report& report) {
  std::ostringstream out;
  out << "id,set_index,patterns,n,count\n";
  for (const auto& e : report.results) {
    for (std::size_t i = 0; i < e.counts.size(); ++i) {
      const std::string sets =
          i < e.pattern_sets.size() ? e.pattern_sets[i] : std::string();
      for (std::size_t n = 0; n < e.counts[i].size(); ++n) {
        out << csv_field(e.id) << ',' << i << ',' << csv_field(sets) << ','
            << n + 1 << ',' << e.counts[i][n] << '\n';
      }
    }
  }
  return out.str();
}

std::string render(const Report& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson: return render_json(report);
    case OutputFormat::kCsv: return render_csv(report);
    case OutputFormat::kText: break;
  }
  return render_text(report);
}

}  // namespace vincular
