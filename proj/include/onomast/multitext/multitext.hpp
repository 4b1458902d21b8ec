// Copyright 2026 The onomast Authors.
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

#ifndef ONOMAST_MULTITEXT_MULTITEXT_HPP_
#define ONOMAST_MULTITEXT_MULTITEXT_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "onomast/aligner/bitext.hpp"
#include "onomast/cascade/entity.hpp"

namespace onomast::multitext {

// SHA-256 of the TEI serialization.
std::string pivot_hash(const corpus::Document& pivot);

struct Column {
  std::string label;
  std::string lang;
  corpus::Document document;
  std::vector<aligner::AlignmentLink> links;
};

// Indices into the pivot's and each column's sentences().
struct Row {
  std::vector<std::size_t> pivot;
  std::vector<std::vector<std::size_t>> cells;
  friend bool operator==(const Row&, const Row&) = default;
};

struct Multitext {
  cascade::AnnotatedDocument pivot;
  std::string pivot_hash;
  std::vector<Column> columns;
  std::vector<Row> rows;

  // Pivot sentences with ENT tags, joined by a space.
  std::string pivot_cell(std::size_t row) const;
  std::string cell(std::size_t row, std::size_t column) const;
};

struct LabeledBitext {
  std::string label;
  aligner::Bitext bitext;
};

Multitext merge(cascade::AnnotatedDocument pivot, std::vector<LabeledBitext> bitexts);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  friend bool operator==(const Table&, const Table&) = default;
};

inline constexpr const char* kPivotHeader = "PIVOT-NP";

Table to_table(const Multitext& mt);

enum class TableFormat { tsv, html };

std::string export_table(const Multitext& mt, TableFormat format);
Table import_table(std::string_view tsv);

std::string escape_cell(std::string_view cell);
std::string unescape_cell(std::string_view cell);

struct Query {
  // Hypertype name or dotted type prefix.
  std::optional<std::string> type;
  // ECMAScript regex searched in the surface.
  std::optional<std::string> surface;
};

struct QueryHit {
  std::size_t row = 0;
  std::vector<const cascade::EntityAnnotation*> matches;
  std::string pivot_cell;
  std::vector<std::string> cells;
};

std::vector<QueryHit> query(const Multitext& mt, const Query& q);

}  // namespace onomast::multitext

#endif  // ONOMAST_MULTITEXT_MULTITEXT_HPP_
