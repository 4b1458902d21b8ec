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

#ifndef ONOMAST_TRANSFER_NAMEPAIR_HPP_
#define ONOMAST_TRANSFER_NAMEPAIR_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "onomast/cascade/entity.hpp"
#include "onomast/multitext/multitext.hpp"
#include "onomast/transfer/project.hpp"

namespace onomast::transfer {

struct TargetSpan {
  std::size_t row = 0;
  std::size_t begin = 0;
  std::size_t end = 0;
  std::string surface;
  friend bool operator==(const TargetSpan&, const TargetSpan&) = default;
};

struct NamePair {
  corpus::SegmentId segment;
  // Position among the pairs of the same segment.
  std::size_t ordinal = 0;
  std::string surface;
  cascade::Hypertype hypertype = cascade::Hypertype::anthroponym;
  std::string target_lang;
  std::optional<TargetSpan> target;
  std::optional<ProcedureLabel> label;
  Evidence evidence = Evidence::none;
  double score = 0.0;
  std::string note;

  // "d1p1s1#0"
  std::string id() const;
  friend bool operator==(const NamePair&, const NamePair&) = default;
};

// Word frequencies and function words of the pivot, for projection.
PivotContext pivot_context(const cascade::AnnotatedDocument& pivot, std::set<std::string> function_words = {});

// One pair per pivot annotation, in document order. Within a row, names
// claim target words in pivot order.
std::vector<NamePair> classify_column(const multitext::Multitext& mt, std::size_t column,
                                      const LanguageResources& resources, const PivotContext& pivot);

inline constexpr const char* kPairsHeader = "pivotSegId\tsurface\thypertype\tlang\ttargetSpan\tlabel\tevidence\tscore\tnote";

std::string write_pairs(const std::vector<NamePair>& pairs);
std::vector<NamePair> read_pairs(std::string_view tsv);

}  // namespace onomast::transfer

#endif  // ONOMAST_TRANSFER_NAMEPAIR_HPP_
