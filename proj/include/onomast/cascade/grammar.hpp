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

#ifndef ONOMAST_CASCADE_GRAMMAR_HPP_
#define ONOMAST_CASCADE_GRAMMAR_HPP_

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "onomast/cascade/entity.hpp"

namespace onomast::cascade {

using WordSet = std::unordered_set<std::string>;
using Lexicons = std::map<std::string, WordSet, std::less<>>;

// Lexicon files: one surface form per line; the name is the file stem.
WordSet parse_lexicon(std::string_view text);
Lexicons load_lexicons(const std::filesystem::path& directory);

// One token constraint of a local grammar.
struct Atom {
  enum class Kind { literal, capitalized, word, number, lexicon, entity };
  enum class Repeat { once, optional, one_or_more };

  Kind kind = Kind::literal;
  Repeat repeat = Repeat::once;
  // Literal text, lexicon name or entity type, depending on `kind`.
  std::string value;
  bool case_sensitive = true;
};

// A compiled local grammar: a linear automaton over token constraints plus
// the tag it emits over atoms [capture_first, capture_last] (0-based,
// inclusive).
struct LocalGrammar {
  std::string name;
  int priority = 0;
  std::vector<Atom> pattern;
  EntityType emits;
  std::size_t capture_first = 0;
  std::size_t capture_last = 0;
};

// Compiles one rule line:
//   <priority> <atom>... => <type>(<first>..<last>)
// Atoms: "literal", "literal"i, @Cap, @Word, @Num, %lexicon, <type>, each
// optionally followed by '?' or '+'. Capture bounds are 1-based atom
// positions and may not cover <type> atoms.
// Throws GrammarError (with line/column) or LexiconError.
LocalGrammar compile_grammar(std::string_view source, const Lexicons& lexicons,
                             const HypertypeMap& types = HypertypeMap::defaults(), int line = 1);

// A whole grammar file: one rule per line, blank lines and '#' comments
// ignored. Rules are named "<file-label>:<line>".
std::vector<LocalGrammar> compile_grammar_file(std::string_view text, const Lexicons& lexicons,
                                               const HypertypeMap& types = HypertypeMap::defaults(),
                                               std::string_view label = "grammar");

}  // namespace onomast::cascade

#endif  // ONOMAST_CASCADE_GRAMMAR_HPP_
