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

#ifndef ONOMAST_CASCADE_CASCADE_HPP_
#define ONOMAST_CASCADE_CASCADE_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "onomast/cascade/entity.hpp"
#include "onomast/cascade/grammar.hpp"

namespace onomast::cascade {

// Grammars grouped into stages of equal priority, stages in strictly
// increasing priority order. Immutable once built.
class Cascade {
 public:
  Cascade() = default;
  // Stable-sorts by priority; throws LexiconError for unresolved lexicons.
  Cascade(std::vector<LocalGrammar> grammars, Lexicons lexicons);

  const std::vector<std::vector<LocalGrammar>>& stages() const { return stages_; }
  const Lexicons& lexicons() const { return lexicons_; }
  std::size_t size() const;

 private:
  std::vector<std::vector<LocalGrammar>> stages_;
  Lexicons lexicons_;
};

// Applies each stage in turn. Within a stage every grammar proposes its
// longest match at every start; proposals are accepted by earliest start,
// then longest capture, then rule order, skipping overlaps. Tokens already
// tagged are only visible to <type> atoms, as one unit.
AnnotatedDocument run_cascade(const corpus::Document& doc, const Cascade& cascade);

// Sentence text with <ENT type="...">...</ENT> around each annotation.
std::string render_tagged(const corpus::Sentence& sentence, const std::vector<const EntityAnnotation*>& annotations);
// Whole document text (headings included, untagged) with tags inserted.
std::string render_tagged(const AnnotatedDocument& doc);

// Inverse of render_tagged(doc): recovers annotations for `doc`. Throws
// ParseError when the untagged text differs from doc.text() or a tag edge
// falls inside a token.
AnnotatedDocument parse_tagged(std::string_view tagged, const corpus::Document& doc,
                               const HypertypeMap& types = HypertypeMap::defaults());

struct CoverageStats {
  double np_char_fraction = 0.0;
  double np_word_fraction = 0.0;
  std::size_t occurrences_total = 0;
  std::size_t occurrences_distinct = 0;
};

// Characters are non-whitespace scalars; words are word tokens. Distinct
// occurrences compare exact surfaces.
CoverageStats coverage_stats(const AnnotatedDocument& doc);

}  // namespace onomast::cascade

#endif  // ONOMAST_CASCADE_CASCADE_HPP_
