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

#ifndef ONOMAST_TRANSFER_RULES_HPP_
#define ONOMAST_TRANSFER_RULES_HPP_

#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "onomast/text/unicode.hpp"

namespace onomast::transfer {

// Longest-match rewriting over lowercased text; ties go to file order.
// Used both for transliteration tables and for pivot respelling tables.
class RewriteTable {
 public:
  struct Rule {
    std::u32string source;
    std::u32string target;
  };

  RewriteTable() = default;
  // Lines "source<TAB>target"; '#' comments.
  static RewriteTable parse(std::string_view text);
  static RewriteTable load(const std::filesystem::path& path);

  void add(std::u32string source, std::u32string target);
  std::string apply(std::string_view input) const;

  // Script of the rule sources (latin for respelling tables).
  text::Script script() const { return script_; }
  const std::vector<Rule>& rules() const { return rules_; }
  // Letters of `alphabet` with no rule starting on them.
  std::u32string uncovered(std::u32string_view alphabet) const;

 private:
  std::vector<Rule> rules_;  // longest source first, stable
  text::Script script_ = text::Script::other;
};

using TransliterationTable = RewriteTable;

std::string transliterate(std::string_view s, const TransliterationTable& table);

class InflectionRules {
 public:
  struct Rule {
    std::string suffix;
    std::string replacement;
  };

  // Sections [inflection] and [derivation], lines "suffix<TAB>replacement",
  // "-" for an empty replacement.
  static InflectionRules parse(std::string_view text);
  static InflectionRules load(const std::filesystem::path& path);

  std::vector<Rule> inflection;
  std::vector<Rule> derivation;
};

struct Lemma {
  enum class Stage { identity, inflection, derivation };
  std::string form;
  Stage stage;
  friend bool operator==(const Lemma&, const Lemma&) = default;
};

// Identity first, then each inflection strip, then derivation strips over
// both. A form reachable at an earlier stage keeps that stage.
std::vector<Lemma> lemma_candidates(std::string_view token, const InflectionRules& rules);
std::set<std::string> strip_inflection(std::string_view token, const InflectionRules& rules);

// Levenshtein distance over folded scalars divided by the longer length.
double edit_distance(std::string_view a, std::string_view b);
double normalized_levenshtein(std::u32string_view a, std::u32string_view b);

struct LexiconEntry {
  std::string lang;
  std::string source;
  std::string target;
  friend bool operator==(const LexiconEntry&, const LexiconEntry&) = default;
};

// Lines "lang<TAB>source<TAB>target".
std::vector<LexiconEntry> parse_bilingual_lexicon(std::string_view text);
std::vector<LexiconEntry> load_bilingual_lexicon(const std::filesystem::path& path);

}  // namespace onomast::transfer

#endif  // ONOMAST_TRANSFER_RULES_HPP_
