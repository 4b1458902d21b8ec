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

#ifndef ONOMAST_ALIGNER_BITEXT_HPP_
#define ONOMAST_ALIGNER_BITEXT_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "onomast/corpus/document.hpp"

namespace onomast::aligner {

using corpus::SegmentId;

enum class LinkStatus { automatic, confirmed, edited };

const char* status_name(LinkStatus s);
LinkStatus parse_status(std::string_view name);

// A group of 0-2 consecutive pivot sentences linked to 0-2 consecutive
// target sentences. Legal shapes: 1:1, 1:2, 2:1, 1:0, 0:1.
struct AlignmentLink {
  std::vector<SegmentId> pivot;
  std::vector<SegmentId> target;
  double score = 0.0;
  LinkStatus status = LinkStatus::automatic;

  // "|pivot|:|target|", e.g. "1:2".
  std::string kind() const;
  friend bool operator==(const AlignmentLink&, const AlignmentLink&) = default;
};

bool legal_shape(std::size_t pivot, std::size_t target);
// Parses "p:t"; throws LinkShapeError when the shape is not legal.
std::pair<std::size_t, std::size_t> parse_shape(std::string_view kind);

struct Bitext {
  corpus::Document pivot;
  corpus::Document target;
  std::vector<AlignmentLink> links;

  double total_cost() const;
};

struct Violation {
  enum class Kind { gap, overlap, non_monotone, illegal_kind, unknown_segment };
  Kind kind;
  // "pivot" or "target"; empty for illegal_kind.
  std::string side;
  std::optional<SegmentId> segment;
  std::size_t link = 0;

  std::string describe() const;
  friend bool operator==(const Violation&, const Violation&) = default;
};

const char* violation_name(Violation::Kind k);

// Partition and monotonicity check; empty iff the links are valid.
std::vector<Violation> validate_links(const Bitext& bitext);

// Link file: one link per line,
//   pivotIds<TAB>targetIds<TAB>kind<TAB>status<TAB>score
// ids comma-separated, "-" for an empty side. Scores use the shortest
// round-trip decimal form.
std::string write_links(const std::vector<AlignmentLink>& links);
// Throws ParseError.
std::vector<AlignmentLink> read_links(std::string_view text);

// Shortest decimal that reads back to the same double.
std::string format_score(double value);

}  // namespace onomast::aligner

#endif  // ONOMAST_ALIGNER_BITEXT_HPP_
