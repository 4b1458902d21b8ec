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

#ifndef ONOMAST_CORPUS_SEGMENT_HPP_
#define ONOMAST_CORPUS_SEGMENT_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "onomast/corpus/document.hpp"

namespace onomast::corpus {

struct SegmentationRules {
  // Tokens ending in '.' that never close a sentence ("esq.", "Mr.").
  std::vector<std::string> abbreviations;
  // ECMAScript patterns; a blank-line block whose first line matches one at
  // its start opens a new division and that line becomes the heading.
  std::vector<std::string> division_markers;
};

// Rules file: '#' comments, "[abbreviations]" and "[divisions]" sections,
// one entry per line.
SegmentationRules parse_segmentation_rules(std::string_view text);
SegmentationRules load_segmentation_rules(const std::filesystem::path& path);

// CRLF/CR to LF, surrounding whitespace trimmed.
std::string normalize_source(std::string_view raw);

// Throws EmptyText when `raw` holds no non-whitespace character.
Document segment_text(std::string_view raw, std::string_view lang, const SegmentationRules& rules,
                      std::optional<text::Script> script = std::nullopt);

}  // namespace onomast::corpus

#endif  // ONOMAST_CORPUS_SEGMENT_HPP_
