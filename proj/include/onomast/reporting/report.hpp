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

#ifndef ONOMAST_REPORTING_REPORT_HPP_
#define ONOMAST_REPORTING_REPORT_HPP_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "onomast/cascade/entity.hpp"
#include "onomast/transfer/namepair.hpp"

namespace onomast::reporting {

struct InventoryRow {
  std::size_t occurrences_total = 0;
  std::size_t occurrences_distinct = 0;
  friend bool operator==(const InventoryRow&, const InventoryRow&) = default;
};

// Rows indexed by Hypertype, in kHypertypes order.
struct InventoryTable {
  std::array<InventoryRow, 4> rows{};
  InventoryRow total;

  const InventoryRow& operator[](cascade::Hypertype h) const { return rows[static_cast<std::size_t>(h)]; }
  friend bool operator==(const InventoryTable&, const InventoryTable&) = default;
};

// Distinct names counted on exact surface.
InventoryTable np_inventory(const cascade::AnnotatedDocument& pivot);

struct SampledName {
  std::string surface;
  std::size_t occurrences = 0;
  friend bool operator==(const SampledName&, const SampledName&) = default;
};

struct FrequencySample {
  std::array<std::vector<SampledName>, 4> selected;
  std::size_t covered_occurrences = 0;
  std::size_t total_occurrences = 0;

  double coverage_share() const;
};

// max(1, floor(fraction * distinct)) names per hypertype with any names,
// most frequent first, ties by first occurrence.
std::size_t sample_size(std::size_t distinct, double fraction = 0.1);
FrequencySample top_frequency_sample(const cascade::AnnotatedDocument& pivot, double fraction = 0.1);

struct MatrixRow {
  std::string lang;
  std::array<std::size_t, 5> counts{};
  std::size_t total = 0;
  // One-decimal percentages in tenths, largest remainder so the row sums to 1000.
  std::array<int, 5> tenths{};

  double percent(transfer::ProcedureLabel l) const;
  friend bool operator==(const MatrixRow&, const MatrixRow&) = default;
};

struct ProcedureMatrix {
  std::vector<MatrixRow> rows;
  friend bool operator==(const ProcedureMatrix&, const ProcedureMatrix&) = default;
};

// Rows in order of first appearance; throws Unlabeled.
ProcedureMatrix procedure_matrix(const std::vector<transfer::NamePair>& pairs);

struct Report {
  std::optional<InventoryTable> inventory;
  std::optional<FrequencySample> sample;
  std::optional<ProcedureMatrix> matrix;
  // What the matrix percentages were computed over.
  std::string basis;
};

enum class ReportFormat { tsv, markdown, json };

std::string emit_report(const Report& report, ReportFormat format);
ProcedureMatrix matrix_from_json(std::string_view json);
InventoryTable inventory_from_json(std::string_view json);

}  // namespace onomast::reporting

#endif  // ONOMAST_REPORTING_REPORT_HPP_
