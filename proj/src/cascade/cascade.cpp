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

#include "onomast/cascade/cascade.hpp"

#include <algorithm>
#include <set>

#include "onomast/error.hpp"

namespace onomast::cascade {

using corpus::Document;
using corpus::Sentence;
using corpus::TokenKind;

Cascade::Cascade(std::vector<LocalGrammar> grammars, Lexicons lexicons) : lexicons_(std::move(lexicons)) {
  for (const LocalGrammar& g : grammars)
    for (const Atom& a : g.pattern)
      if (a.kind == Atom::Kind::lexicon && lexicons_.find(a.value) == lexicons_.end())
        throw LexiconError("grammar " + g.name + " references missing lexicon '" + a.value + "'");
  std::stable_sort(grammars.begin(), grammars.end(),
                   [](const LocalGrammar& a, const LocalGrammar& b) { return a.priority < b.priority; });
  for (LocalGrammar& g : grammars) {
    if (stages_.empty() || stages_.back().front().priority != g.priority) stages_.emplace_back();
    stages_.back().push_back(std::move(g));
  }
}

std::size_t Cascade::size() const {
  std::size_t n = 0;
  for (const auto& stage : stages_) n += stage.size();
  return n;
}

namespace {

// A free token or an already-tagged entity seen as one unit.
struct Unit {
  std::size_t token_begin;
  std::size_t token_end;
  const EntityAnnotation* entity;  // null for free tokens
};

struct Match {
  std::size_t end_unit = 0;
  std::size_t capture_begin = 0;
  std::size_t capture_end = 0;
};

class Matcher {
 public:
  Matcher(const Sentence& sentence, const std::vector<Unit>& units, const Lexicons& lexicons)
      : sentence_(sentence), units_(units), lexicons_(lexicons) {}

  // Longest match of `g` starting at unit `start`; among equally long
  // matches the first found by greedy exploration wins.
  std::optional<Match> longest(const LocalGrammar& g, std::size_t start) {
    grammar_ = &g;
    best_.reset();
    explore(0, start, start, start);
    return best_;
  }

 private:
  bool accepts(const Atom& atom, const Unit& unit) const {
    if (atom.kind == Atom::Kind::entity) return unit.entity && unit.entity->type.matches(atom.value);
    if (unit.entity) return false;
    const auto& token = sentence_.tokens()[unit.token_begin];
    const std::string_view text = sentence_.token_text(unit.token_begin);
    switch (atom.kind) {
      case Atom::Kind::literal:
        return atom.case_sensitive ? text == atom.value : text::fold(text) == text::fold(atom.value);
      case Atom::Kind::capitalized:
        return token.kind == TokenKind::word && text::is_upper(text::to_u32(text::scalar_substr(text, 0, 1)).front());
      case Atom::Kind::word: return token.kind == TokenKind::word;
      case Atom::Kind::number: return token.kind == TokenKind::number;
      case Atom::Kind::lexicon: {
        const auto& words = lexicons_.find(atom.value)->second;
        return words.count(std::string(text)) > 0;
      }
      case Atom::Kind::entity: break;
    }
    return false;
  }

  void explore(std::size_t atom_i, std::size_t unit_j, std::size_t cap_begin, std::size_t cap_end) {
    const auto& pattern = grammar_->pattern;
    if (atom_i == pattern.size()) {
      if (cap_end <= cap_begin) return;
      if (!best_ || unit_j > best_->end_unit) best_ = Match{unit_j, cap_begin, cap_end};
      return;
    }
    const Atom& atom = pattern[atom_i];
    // Maximal run of units this atom accepts from unit_j.
    std::size_t run = 0;
    const std::size_t limit = atom.repeat == Atom::Repeat::one_or_more ? units_.size() : 1;
    while (run < limit && unit_j + run < units_.size() && accepts(atom, units_[unit_j + run])) ++run;
    const std::size_t min_take = atom.repeat == Atom::Repeat::optional ? 0 : 1;
    for (std::size_t take = run + 1; take-- > min_take;) {
      std::size_t b = cap_begin;
      std::size_t e = cap_end;
      if (atom_i == grammar_->capture_first) b = unit_j;
      if (atom_i == grammar_->capture_last) e = unit_j + take;
      explore(atom_i + 1, unit_j + take, b, e);
    }
  }

  const Sentence& sentence_;
  const std::vector<Unit>& units_;
  const Lexicons& lexicons_;
  const LocalGrammar* grammar_ = nullptr;
  std::optional<Match> best_;
};

std::vector<Unit> build_units(const Sentence& sentence, const std::vector<EntityAnnotation>& existing) {
  std::vector<Unit> units;
  std::size_t t = 0;
  auto next = existing.begin();
  while (t < sentence.tokens().size()) {
    if (next != existing.end() && next->begin == t) {
      units.push_back({next->begin, next->end, &*next});
      t = next->end;
      ++next;
    } else {
      units.push_back({t, t + 1, nullptr});
      ++t;
    }
  }
  return units;
}

struct Candidate {
  std::size_t begin;
  std::size_t end;
  std::size_t rule;
};

void tag_sentence(const Sentence& sentence, const Cascade& cascade, std::vector<EntityAnnotation>& out) {
  std::vector<EntityAnnotation> found;
  for (const auto& stage : cascade.stages()) {
    const std::vector<Unit> units = build_units(sentence, found);
    Matcher matcher(sentence, units, cascade.lexicons());
    std::vector<Candidate> candidates;
    for (std::size_t r = 0; r < stage.size(); ++r) {
      for (std::size_t start = 0; start < units.size(); ++start) {
        if (auto m = matcher.longest(stage[r], start))
          candidates.push_back({units[m->capture_begin].token_begin, units[m->capture_end - 1].token_end, r});
      }
    }
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
      if (a.begin != b.begin) return a.begin < b.begin;
      if (a.end != b.end) return a.end > b.end;
      return a.rule < b.rule;
    });
    std::vector<EntityAnnotation> accepted;
    std::size_t frontier = 0;
    for (const Candidate& c : candidates) {
      if (c.begin < frontier) continue;
      accepted.push_back({sentence.id(), c.begin, c.end, stage[c.rule].emits, std::string(sentence.span_text(c.begin, c.end))});
      frontier = c.end;
    }
    if (accepted.empty()) continue;
    found.insert(found.end(), accepted.begin(), accepted.end());
    std::sort(found.begin(), found.end(),
              [](const EntityAnnotation& a, const EntityAnnotation& b) { return a.begin < b.begin; });
  }
  out.insert(out.end(), found.begin(), found.end());
}

std::size_t byte_offset(const Sentence& s, std::size_t token) {
  return static_cast<std::size_t>(s.span_text(token, token + 1).data() - s.text().data());
}

std::size_t byte_end(const Sentence& s, std::size_t token) {
  const std::string_view t = s.span_text(token, token + 1);
  return static_cast<std::size_t>(t.data() - s.text().data()) + t.size();
}

const std::string kOpen = "<ENT type=\"";
const std::string kClose = "</ENT>";

}  // namespace

AnnotatedDocument run_cascade(const Document& doc, const Cascade& cascade) {
  AnnotatedDocument out{doc, {}};
  for (const Sentence* s : doc.sentences()) tag_sentence(*s, cascade, out.annotations);
  return out;
}

std::string render_tagged(const Sentence& sentence, const std::vector<const EntityAnnotation*>& annotations) {
  std::string out;
  std::size_t at = 0;
  const std::string& text = sentence.text();
  for (const EntityAnnotation* a : annotations) {
    const std::size_t b = byte_offset(sentence, a->begin);
    const std::size_t e = byte_end(sentence, a->end - 1);
    out.append(text, at, b - at);
    out += kOpen + a->type.raw + "\">";
    out.append(text, b, e - b);
    out += kClose;
    at = e;
  }
  out.append(text, at, std::string::npos);
  return out;
}

std::string render_tagged(const AnnotatedDocument& doc) {
  std::string out;
  for (const auto& div : doc.document.divisions()) {
    if (div.head) out += *div.head + div.head_space_after;
    for (const auto& para : div.paragraphs)
      for (const Sentence& s : para.sentences) out += render_tagged(s, doc.in_sentence(s.id())) + s.space_after();
  }
  return out;
}

AnnotatedDocument parse_tagged(std::string_view tagged, const Document& doc, const HypertypeMap& types) {
  struct Raw {
    std::size_t begin;
    std::size_t end;
    std::string type;
  };
  std::string plain;
  std::vector<Raw> raws;
  std::optional<Raw> open;
  std::size_t i = 0;
  int line = 1;
  while (i < tagged.size()) {
    if (tagged.compare(i, kOpen.size(), kOpen) == 0) {
      const std::size_t close = tagged.find("\">", i + kOpen.size());
      if (open || close == std::string_view::npos) throw ParseError("malformed or nested <ENT> tag", line);
      open = Raw{plain.size(), 0, std::string(tagged.substr(i + kOpen.size(), close - i - kOpen.size()))};
      i = close + 2;
    } else if (tagged.compare(i, kClose.size(), kClose) == 0) {
      if (!open) throw ParseError("</ENT> without opening tag", line);
      open->end = plain.size();
      raws.push_back(*open);
      open.reset();
      i += kClose.size();
    } else {
      if (tagged[i] == '\n') ++line;
      plain.push_back(tagged[i++]);
    }
  }
  if (open) throw ParseError("unterminated <ENT> tag", line);
  if (plain != doc.text()) throw ParseError("tagged text does not match the document text", line);

  // Byte start of each sentence within doc.text().
  std::vector<std::size_t> starts;
  std::size_t at = 0;
  for (const auto& div : doc.divisions()) {
    if (div.head) at += div.head->size() + div.head_space_after.size();
    for (const auto& para : div.paragraphs)
      for (const Sentence& s : para.sentences) {
        starts.push_back(at);
        at += s.text().size() + s.space_after().size();
      }
  }

  AnnotatedDocument out{doc, {}};
  for (const Raw& r : raws) {
    auto it = std::upper_bound(starts.begin(), starts.end(), r.begin);
    if (it == starts.begin()) throw ParseError("entity outside any sentence", 0);
    const std::size_t index = static_cast<std::size_t>(it - starts.begin()) - 1;
    const Sentence& s = doc.sentence(index);
    const std::size_t b = r.begin - starts[index];
    const std::size_t e = r.end - starts[index];
    std::optional<std::size_t> first;
    std::optional<std::size_t> last;
    for (std::size_t t = 0; t < s.tokens().size(); ++t) {
      if (byte_offset(s, t) == b) first = t;
      if (byte_end(s, t) == e) last = t;
    }
    if (!first || !last || *last < *first)
      throw ParseError("entity '" + r.type + "' does not align with token boundaries in " + s.id().str(), 0);
    auto hypertype = types.resolve(r.type);
    if (!hypertype) throw ParseError("entity type '" + r.type + "' has no hypertype mapping", 0);
    out.annotations.push_back(
        {s.id(), *first, *last + 1, {r.type, *hypertype}, std::string(s.span_text(*first, *last + 1))});
  }
  std::stable_sort(out.annotations.begin(), out.annotations.end(), [](const auto& a, const auto& b) {
    return a.segment != b.segment ? a.segment < b.segment : a.begin < b.begin;
  });
  return out;
}

CoverageStats coverage_stats(const AnnotatedDocument& doc) {
  CoverageStats stats;
  std::size_t chars = 0;
  std::size_t words = 0;
  std::size_t np_chars = 0;
  std::size_t np_words = 0;
  for (const Sentence* s : doc.document.sentences()) {
    for (char32_t c : text::to_u32(s->text()))
      if (!text::is_space(c)) ++chars;
    for (const auto& t : s->tokens())
      if (t.kind == TokenKind::word) ++words;
  }
  std::set<std::string> distinct;
  for (const EntityAnnotation& a : doc.annotations) {
    const Sentence& s = doc.document.sentence(*doc.document.index_of(a.segment));
    for (char32_t c : text::to_u32(s.span_text(a.begin, a.end)))
      if (!text::is_space(c)) ++np_chars;
    for (std::size_t t = a.begin; t < a.end; ++t)
      if (s.tokens()[t].kind == TokenKind::word) ++np_words;
    distinct.insert(a.surface);
  }
  stats.occurrences_total = doc.annotations.size();
  stats.occurrences_distinct = distinct.size();
  stats.np_char_fraction = chars ? static_cast<double>(np_chars) / static_cast<double>(chars) : 0.0;
  stats.np_word_fraction = words ? static_cast<double>(np_words) / static_cast<double>(words) : 0.0;
  return stats;
}

}  // namespace onomast::cascade
