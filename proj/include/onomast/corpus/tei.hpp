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

#ifndef ONOMAST_CORPUS_TEI_HPP_
#define ONOMAST_CORPUS_TEI_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "onomast/corpus/document.hpp"

namespace onomast::corpus {

// TEI-lite: <TEI xml:lang=".." script=".."><text><body> holding nested
// <d>/<p>/<s> elements whose xml:id is the canonical segment id. Division
// headings are <head> children of <d>. Inter-segment whitespace is kept as
// text between the closing tags, so the file's character data reproduces the
// source text. Output bytes depend only on the Document.
std::string serialize_tei(const Document& doc);

struct TeiReadResult {
  Document document;
  // Markup that was flattened or ignored.
  std::vector<std::string> warnings;
};

// Throws ParseError on malformed XML and IdError on duplicate or
// non-contiguous ids.
TeiReadResult parse_tei(std::string_view bytes);

}  // namespace onomast::corpus

#endif  // ONOMAST_CORPUS_TEI_HPP_
