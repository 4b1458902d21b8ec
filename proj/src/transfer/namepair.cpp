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

#include "onomast/transfer/namepair.hpp"

#include <charconv>

#include "onomast/aligner/bitext.hpp"
#include "onomast/error.hpp"

namespace onomast::transfer {

std::string NamePair::id() const { return segment.str() + "#" + std::to_string(ordinal); }

PivotContext pivot_context(const cascade::AnnotatedDocument& pivot, std::set<std::string> function_words) {
  PivotContext ctx;
  ctx.function_words = std::move(function_words);
  for (const corpus::Sentence* s : pivot.document.sentences())
    for (const Unit& u : text_units(s->text())) ++ctx.frequency[text::fold(u.text)];
  return ctx;
}

std::vector<NamePair> classify_column(const multitext::Multitext& mt, std::size_t column,
                                      const LanguageResources& resources, const PivotContext& pivot) {
  const corpus::Document& doc = mt.pivot.document;
  std::vector<std::size_t> row_of(doc.size(), 0);
  for (std::size_t r = 0; r < mt.rows.size(); ++r)
    for (std::size_t i : mt.rows[r].pivot) row_of[i] = r;

  std::vector<NamePair> out;
  std::optional<std::size_t> current_row;
  std::string cell;
  std::vector<bool> blocked;
  for (const corpus::Sentence* s : doc.sentences()) {
    const std::size_t row = row_of[*doc.index_of(s->id())];
    if (current_row != row) {
      current_row = row;
      cell = mt.cell(row, column);
      blocked.assign(text_units(cell).size(), false);
    }
    std::size_t ordinal = 0;
    for (const cascade::EntityAnnotation* a : mt.pivot.in_sentence(s->id())) {
      NamePair p;
      p.segment = s->id();
      p.ordinal = ordinal++;
      p.surface = a->surface;
      p.hypertype = a->type.hypertype;
      p.target_lang = resources.lang;
      Projection proj = project_entity(a->surface, cell, resources, pivot, blocked);
      for (std::size_t u : proj.units) blocked[u] = true;
      if (proj.span) p.target = TargetSpan{row, proj.span->begin, proj.span->end, proj.span->surface};
      p.evidence = proj.evidence;
      p.score = proj.score;
      p.label = classify_procedure(proj, &p.note);
      out.push_back(std::move(p));
    }
  }
  return out;
}

namespace {

std::size_t parse_size(std::string_view s, int line) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError("bad number '" + std::string(s) + "'", line);
  return v;
}

}  // namespace

std::string write_pairs(const std::vector<NamePair>& pairs) {
  using multitext::escape_cell;
  std::string out = std::string(kPairsHeader) + "\n";
  for (const NamePair& p : pairs) {
    std::string span = "-";
    if (p.target)
      span = std::to_string(p.target->row) + ":" + std::to_string(p.target->begin) + "-" +
             std::to_string(p.target->end) + " " + p.target->surface;
    out += p.segment.str() + '\t' + escape_cell(p.surface) + '\t' + cascade::hypertype_name(p.hypertype) + '\t' +
           p.target_lang + '\t' + escape_cell(span) + '\t' + (p.label ? label_name(*p.label) : "-") + '\t' +
           evidence_name(p.evidence) + '\t' + aligner::format_score(p.score) + '\t' + escape_cell(p.note) + '\n';
  }
  return out;
}

std::vector<NamePair> read_pairs(std::string_view tsv) {
  using multitext::unescape_cell;
  std::vector<NamePair> out;
  std::size_t start = 0;
  int line = 0;
  std::optional<corpus::SegmentId> last_segment;
  std::size_t ordinal = 0;
  while (start < tsv.size()) {
    std::size_t end = tsv.find('\n', start);
    if (end == std::string_view::npos) end = tsv.size();
    std::string_view l = tsv.substr(start, end - start);
    start = end + 1;
    ++line;
    if (line == 1) {
      if (l != kPairsHeader) throw ParseError("missing name pair header", 1);
      continue;
    }
    if (l.empty()) continue;
    std::vector<std::string_view> f;
    std::size_t from = 0;
    for (;;) {
      const std::size_t tab = l.find('\t', from);
      f.push_back(l.substr(from, tab - from));
      if (tab == std::string_view::npos) break;
      from = tab + 1;
    }
    if (f.size() != 9) throw ParseError("expected 9 fields", line);
    NamePair p;
    try {
      p.segment = corpus::parse_segment_id(f[0]);
      p.hypertype = cascade::parse_hypertype(f[2]);
      p.evidence = parse_evidence(f[6]);
      if (f[5] != "-") p.label = parse_label(f[5]);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.what(), line);
    }
    p.surface = unescape_cell(f[1]);
    p.target_lang = std::string(f[3]);
    const std::string span = unescape_cell(f[4]);
    if (span != "-") {
      const std::size_t colon = span.find(':');
      const std::size_t dash = span.find('-', colon);
      const std::size_t space = span.find(' ', dash);
      if (colon == std::string::npos || dash == std::string::npos || space == std::string::npos)
        throw ParseError("bad target span '" + span + "'", line);
      p.target = TargetSpan{parse_size(std::string_view(span).substr(0, colon), line),
                            parse_size(std::string_view(span).substr(colon + 1, dash - colon - 1), line),
                            parse_size(std::string_view(span).substr(dash + 1, space - dash - 1), line),
                            span.substr(space + 1)};
    }
    char* endp = nullptr;
    const std::string score(f[7]);
    p.score = std::strtod(score.c_str(), &endp);
    if (endp != score.c_str() + score.size()) throw ParseError("bad score '" + score + "'", line);
    p.note = unescape_cell(f[8]);
    ordinal = last_segment == p.segment ? ordinal + 1 : 0;
    last_segment = p.segment;
    p.ordinal = ordinal;
    out.push_back(std::move(p));
  }
  if (line == 0) throw ParseError("missing name pair header", 1);
  return out;
}

}  // namespace onomast::transfer
