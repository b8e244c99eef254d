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

#include "vincular/tables.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "vincular/error.hpp"

namespace vincular {
namespace detail {
extern const char* const kEmbeddedTables;
}  // namespace detail

namespace {

using nlohmann::json;

constexpr int kSupportedFormat = 1;

[[noreturn]] void data_error(const std::string& what) {
  throw Error(ErrorCode::kData, what);
}

std::vector<VincularPattern> parse_patterns(const json& list) {
  std::vector<VincularPattern> out;
  for (const auto& item : list) out.push_back(parse_pattern(item.get<std::string>()));
  return out;
}

SequenceFamily parse_family(const json& j) {
  const auto name = j.at("kind").get<std::string>();
  const auto kind = family_kind_from_string(name);
  if (!kind) data_error("unknown sequence family '" + name + "'");
  SequenceFamily family = SequenceFamily::of(*kind);
  if (*kind == FamilyKind::kConstant) {
    family.constant = j.at("constant").get<std::uint64_t>();
    if (j.contains("threshold")) family.threshold = j.at("threshold").get<int>();
  }
  return family;
}

TableRow parse_row(const json& j, int table_id, std::size_t index) {
  TableRow row;
  row.name = j.value("name", "");
  row.label = row.name.empty() ? "T" + std::to_string(table_id) + "." +
                                     std::to_string(index + 1)
                               : row.name;
  if (j.contains("patterns")) row.patterns = PatternSet(parse_patterns(j["patterns"]));
  row.base = j.value("base", "");
  if (j.contains("base_sets")) {
    for (const auto& s : j["base_sets"]) row.base_sets.emplace_back(parse_patterns(s));
  }
  if (j.contains("add")) row.add = parse_patterns(j["add"]);
  if (j.contains("columns")) {
    for (const auto& c : j["columns"]) row.columns.push_back(parse_patterns(c));
  }
  row.proposition = j.value("proposition", "");
  if (!row.proposition.empty() && find_lemma(row.proposition) == nullptr) {
    data_error(row.label + ": unknown proposition " + row.proposition);
  }
  if (j.contains("structure")) {
    const auto name = j["structure"].get<std::string>();
    row.structure = structure_template_from_string(name);
    if (!row.structure) data_error(row.label + ": unknown structure " + name);
  }
  row.sequence = j.value("sequence", "");
  row.erratum = j.value("erratum", "");
  row.family = parse_family(j.at("family"));

  const bool explicit_set = row.patterns.has_value();
  const bool generator = !row.add.empty() && (!row.base.empty() || !row.base_sets.empty());
  const bool product = !row.columns.empty();
  if (explicit_set + generator + product != 1) {
    data_error(row.label + ": row must give patterns, base+add, or columns");
  }
  if (!row.base_sets.empty() && row.add.size() != 1) {
    data_error(row.label + ": alternative bases take exactly one added pattern");
  }
  return row;
}

}  // namespace

TableCatalogue TableCatalogue::from_json_text(std::string_view text,
                                              std::string source) {
  TableCatalogue catalogue;
  catalogue.source_ = std::move(source);
  try {
    const json doc = json::parse(text);
    catalogue.format_version_ = doc.at("format_version").get<int>();
    if (catalogue.format_version_ != kSupportedFormat) {
      data_error("unsupported table format version " +
                 std::to_string(catalogue.format_version_));
    }
    for (const auto& t : doc.at("tables")) {
      Table table;
      table.id = t.at("id").get<int>();
      table.caption = t.value("caption", "");
      table.arity = t.at("arity").get<int>();
      if (t.contains("claims")) {
        const auto& c = t["claims"];
        table.claims = CrossProductClaims{c.at("raw_sets").get<int>(),
                                          c.at("distinct_classes").get<int>(),
                                          c.at("duplicate_box_row").get<int>()};
      }
      const auto& rows = t.at("rows");
      for (std::size_t i = 0; i < rows.size(); ++i) {
        table.rows.push_back(parse_row(rows[i], table.id, i));
      }
      catalogue.tables_.push_back(std::move(table));
    }
  } catch (const json::exception& e) {
    data_error("malformed table data in " + catalogue.source_ + ": " + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kData) throw;
    data_error("bad table data in " + catalogue.source_ + ": " + e.what());
  }
  return catalogue;
}

TableCatalogue TableCatalogue::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) data_error("cannot open table data file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return from_json_text(buffer.str(), path);
}

const TableCatalogue& TableCatalogue::embedded() {
  static const TableCatalogue catalogue =
      from_json_text(detail::kEmbeddedTables, "<embedded>");
  return catalogue;
}

bool TableCatalogue::has_table(int id) const {
  for (const auto& t : tables_) {
    if (t.id == id) return true;
  }
  return false;
}

const Table& TableCatalogue::table(int id) const {
  for (const auto& t : tables_) {
    if (t.id == id) return t;
  }
  data_error("no data for table " + std::to_string(id));
}

const TableRow* TableCatalogue::find_row(std::string_view name) const {
  for (const auto& t : tables_) {
    for (const auto& r : t.rows) {
      if (r.label == name) return &r;
      if (!r.name.empty() && r.name == name) return &r;
    }
  }
  return nullptr;
}

PatternSet TableCatalogue::named_set(std::string_view name) const {
  const TableRow* row = find_row(name);
  if (row == nullptr) data_error("no table row named " + std::string(name));
  if (row->patterns) return *row->patterns;
  if (!row->base.empty() && row->add.size() == 1) {
    return named_set(row->base).with(row->add.front());
  }
  data_error("row " + std::string(name) + " does not name a single set");
}

std::vector<ExpandedSet> TableCatalogue::expand(const TableRow& row) const {
  std::vector<ExpandedSet> out;
  if (!row.columns.empty()) {
    const auto sets = expand_columns(row.columns);
    for (std::size_t i = 0; i < sets.size(); ++i) {
      out.push_back({sets[i], std::nullopt, std::nullopt,
                     "choice " + std::to_string(i + 1) + " of " +
                         std::to_string(sets.size())});
    }
    return out;
  }
  if (row.patterns) {
    ExpandedSet e{*row.patterns, std::nullopt, std::nullopt, row.label};
    if (!row.base.empty()) {
      e.base = named_set(row.base);
      const PatternSet extra = row.patterns->minus(*e.base);
      if (extra.size() == 1) e.added = extra[0];
      e.provenance = row.base + " + " + (e.added ? e.added->to_string() : "?");
    }
    out.push_back(std::move(e));
    return out;
  }
  if (!row.base_sets.empty()) {
    for (const auto& base : row.base_sets) {
      out.push_back({base.with(row.add.front()), base, row.add.front(),
                     base.to_string() + " + " + row.add.front().to_string()});
    }
    return out;
  }
  const PatternSet base = named_set(row.base);
  for (const auto& extra : row.add) {
    out.push_back({base.with(extra), base, extra,
                   row.base + " + " + extra.to_string()});
  }
  return out;
}

}  // namespace vincular
