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

#ifndef VINCULAR_TABLES_HPP_
#define VINCULAR_TABLES_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vincular/lemmas.hpp"
#include "vincular/pattern.hpp"
#include "vincular/sequences.hpp"

namespace vincular {

// One row of an enumeration table, stored the way the table presents it.
// Exactly one of these shapes is used:
//   patterns [+ proposition + base]   explicit set, optionally derived
//   base + add                        base row plus one pattern from `add`
//   base_sets + add                   each alternative base plus add[0]
//   columns [+ structure]             one pattern per column
struct TableRow {
  std::string name;   // table label such as "N1", "d17", "O12"; may be empty
  std::string label;  // name, or "T<table>.<row>" for anonymous rows
  std::optional<PatternSet> patterns;
  std::string base;
  std::vector<PatternSet> base_sets;
  std::vector<VincularPattern> add;
  PatternColumns columns;
  std::string proposition;  // closure lemma id, P1..P8
  std::optional<StructureTemplate> structure;
  std::string sequence;  // claimed sequence, verbatim
  SequenceFamily family;
  // Set when the row as printed is known not to hold; verification then
  // expects the mismatch instead of a match.
  std::string erratum;
};

// Counts a table states about its own cross-product rows.
struct CrossProductClaims {
  int raw_sets = 0;
  int distinct_classes = 0;
  int duplicate_box_row = 0;
};

struct Table {
  int id = 0;
  std::string caption;
  int arity = 0;
  std::optional<CrossProductClaims> claims;
  std::vector<TableRow> rows;
};

// A concrete pattern set produced by a row, with where it came from.
struct ExpandedSet {
  PatternSet set;
  std::optional<PatternSet> base;
  std::optional<VincularPattern> added;
  std::string provenance;
};

class TableCatalogue {
 public:
  // Throws Error(kData) on malformed input.
  static TableCatalogue from_json_text(std::string_view text,
                                       std::string source = "<memory>");
  static TableCatalogue load_file(const std::string& path);
  // The copy compiled into the library.
  static const TableCatalogue& embedded();

  int format_version() const { return format_version_; }
  const std::string& source() const { return source_; }
  const std::vector<Table>& tables() const { return tables_; }
  bool has_table(int id) const;
  const Table& table(int id) const;

  const TableRow* find_row(std::string_view name) const;
  // The pattern set a named row stands for.
  PatternSet named_set(std::string_view name) const;

  std::vector<ExpandedSet> expand(const TableRow& row) const;

 private:
  int format_version_ = 0;
  std::string source_;
  std::vector<Table> tables_;
};

}  // namespace vincular

#endif  // VINCULAR_TABLES_HPP_
