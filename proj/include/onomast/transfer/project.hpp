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

#ifndef ONOMAST_TRANSFER_PROJECT_HPP_
#define ONOMAST_TRANSFER_PROJECT_HPP_

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "onomast/transfer/rules.hpp"

namespace onomast::transfer {

// Ladder rungs, strongest first.
enum class Evidence { exact, translit, lemma, edit, lexicon, none };

const char* evidence_name(Evidence e);
Evidence parse_evidence(std::string_view name);

enum class ProcedureLabel { Borrowing, Assimilation, Calque, Absence, Other };

inline constexpr ProcedureLabel kProcedureLabels[] = {ProcedureLabel::Borrowing, ProcedureLabel::Assimilation,
                                                      ProcedureLabel::Calque, ProcedureLabel::Absence,
                                                      ProcedureLabel::Other};

const char* label_name(ProcedureLabel l);
ProcedureLabel parse_label(std::string_view name);

inline constexpr double kDefaultTheta = 0.34;

struct LanguageResources {
  std::string lang;
  std::optional<TransliterationTable> transliteration;
  std::optional<RewriteTable> respelling;
  InflectionRules inflection;
  // Entries for this language only.
  std::vector<LexiconEntry> lexicon;
  double theta = kDefaultTheta;
};

// Reads translit/{lang}.tsv, respell/{lang}.tsv and inflection/{lang}.rules
// under `root` when present.
LanguageResources load_language_resources(const std::filesystem::path& root, const std::string& lang,
                                          const std::vector<LexiconEntry>& lexicon, double theta = kDefaultTheta);

// A word of a text split at hyphens; offsets in scalars.
struct Unit {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::string text;
};

std::vector<Unit> text_units(std::string_view text);

struct PivotContext {
  // Folded pivot words ignored by the lexicon rung.
  std::set<std::string> function_words;
  // Folded pivot word frequencies; rarer heads anchor first.
  std::map<std::string, std::size_t> frequency;
};

struct CellSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::string surface;
  friend bool operator==(const CellSpan&, const CellSpan&) = default;
};

struct Projection {
  std::optional<CellSpan> span;
  Evidence evidence = Evidence::none;
  // 1 - normalized distance of the weakest matched word.
  double score = 0.0;
  // The match needed a derivational strip.
  bool derivational = false;
  // Indices into text_units(cell).
  std::vector<std::size_t> units;
};

// `blocked` marks cell units already claimed by earlier names of the row.
Projection project_entity(std::string_view surface, std::string_view cell, const LanguageResources& resources,
                          const PivotContext& pivot = {}, const std::vector<bool>& blocked = {});

ProcedureLabel classify_procedure(const Projection& projection, std::string* note = nullptr);

}  // namespace onomast::transfer

#endif  // ONOMAST_TRANSFER_PROJECT_HPP_
