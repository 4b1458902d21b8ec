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

#include "onomast/transfer/project.hpp"

#include <algorithm>
#include <tuple>

#include "onomast/corpus/document.hpp"
#include "onomast/error.hpp"

namespace onomast::transfer {

const char* evidence_name(Evidence e) {
  switch (e) {
    case Evidence::exact: return "exact";
    case Evidence::translit: return "translit";
    case Evidence::lemma: return "lemma";
    case Evidence::edit: return "edit";
    case Evidence::lexicon: return "lexicon";
    case Evidence::none: return "none";
  }
  return "?";
}

Evidence parse_evidence(std::string_view name) {
  for (Evidence e : {Evidence::exact, Evidence::translit, Evidence::lemma, Evidence::edit, Evidence::lexicon,
                     Evidence::none})
    if (name == evidence_name(e)) return e;
  throw ParseError("unknown evidence '" + std::string(name) + "'", 0);
}

const char* label_name(ProcedureLabel l) {
  switch (l) {
    case ProcedureLabel::Borrowing: return "Borrowing";
    case ProcedureLabel::Assimilation: return "Assimilation";
    case ProcedureLabel::Calque: return "Calque";
    case ProcedureLabel::Absence: return "Absence";
    case ProcedureLabel::Other: return "Other";
  }
  return "?";
}

ProcedureLabel parse_label(std::string_view name) {
  for (ProcedureLabel l : kProcedureLabels)
    if (name == label_name(l)) return l;
  throw ParseError("unknown procedure label '" + std::string(name) + "'", 0);
}

LanguageResources load_language_resources(const std::filesystem::path& root, const std::string& lang,
                                          const std::vector<LexiconEntry>& lexicon, double theta) {
  LanguageResources r;
  r.lang = lang;
  r.theta = theta;
  if (auto p = root / "translit" / (lang + ".tsv"); std::filesystem::exists(p)) r.transliteration = RewriteTable::load(p);
  if (auto p = root / "respell" / (lang + ".tsv"); std::filesystem::exists(p)) r.respelling = RewriteTable::load(p);
  if (auto p = root / "inflection" / (lang + ".rules"); std::filesystem::exists(p))
    r.inflection = InflectionRules::load(p);
  for (const LexiconEntry& e : lexicon)
    if (e.lang == lang) r.lexicon.push_back(e);
  return r;
}

namespace {

bool is_hyphen(char32_t c) { return c == U'-' || c == U'‐' || c == U'‑'; }

bool is_alnum(char32_t c) { return text::is_letter(c) || text::is_digit(c); }

}  // namespace

std::vector<Unit> text_units(std::string_view input) {
  const std::u32string s = text::to_u32(input);
  std::vector<Unit> out;
  for (const corpus::Token& t : corpus::tokenize(input)) {
    if (t.kind == corpus::TokenKind::punct) continue;
    std::size_t start = t.offset;
    for (std::size_t i = t.offset; i <= t.end(); ++i) {
      if (i == t.end() || is_hyphen(s[i])) {
        if (i > start) out.push_back({start, i, text::to_utf8(std::u32string_view(s).substr(start, i - start))});
        start = i + 1;
      }
    }
  }
  return out;
}

namespace {

struct PivotWord {
  std::size_t position;
  std::string raw;
  std::u32string folded;
  std::u32string respelled;
  bool capitalized;
  std::size_t frequency;
};

struct WordMatch {
  Evidence rung = Evidence::none;
  double distance = 1.0;
  bool derivational = false;

  auto key() const { return std::make_tuple(static_cast<int>(rung), distance, derivational); }
  bool better_than(const WordMatch& o) const { return key() < o.key(); }
};

class Projector {
 public:
  Projector(std::string_view surface, std::string_view cell, const LanguageResources& res, const PivotContext& pivot,
            const std::vector<bool>& blocked)
      : surface_(surface), cell_(cell), res_(res), pivot_(pivot), units_(text_units(cell)), blocked_(blocked) {
    blocked_.resize(units_.size(), false);
    std::size_t pos = 0;
    for (const Unit& u : text_units(surface)) {
      PivotWord w;
      w.position = pos++;
      w.raw = u.text;
      w.folded = text::fold(text::to_u32(u.text));
      w.respelled = res.respelling ? text::fold(text::to_u32(res.respelling->apply(u.text))) : w.folded;
      const std::u32string raw32 = text::to_u32(u.text);
      w.capitalized = !raw32.empty() && text::is_upper(raw32[0]);
      auto f = pivot.frequency.find(text::to_utf8(w.folded));
      w.frequency = f == pivot.frequency.end() ? 0 : f->second;
      words_.push_back(std::move(w));
    }
    for (const Unit& u : units_) lemmas_.push_back(lemma_candidates(u.text, res.inflection));
  }

  Projection run() {
    if (auto p = exact_substring()) return *p;
    std::optional<Projection> partial;
    if (auto a = anchored()) {
      if (a->complete) return a->projection;
      partial = std::move(a->projection);
    }
    if (auto p = lexicon()) return *p;
    return partial.value_or(Projection{});
  }

 private:
  std::u32string romanize(const std::string& form) const {
    const std::u32string f = text::to_u32(form);
    const text::Script script = text::dominant_script(f);
    if (script != text::Script::latin && res_.transliteration && res_.transliteration->script() == script)
      return text::fold(text::to_u32(res_.transliteration->apply(form)));
    return text::fold(f);
  }

  bool cross_script(const std::string& form) const {
    const text::Script script = text::dominant_script(text::to_u32(form));
    return script != text::Script::latin && res_.transliteration && res_.transliteration->script() == script;
  }

  WordMatch match_word(const PivotWord& w, std::size_t unit) const {
    WordMatch best;
    for (const Lemma& l : lemmas_[unit]) {
      const std::u32string r = romanize(l.form);
      const double d = std::min(normalized_levenshtein(r, w.folded), normalized_levenshtein(r, w.respelled));
      WordMatch m;
      m.derivational = l.stage == Lemma::Stage::derivation;
      if (l.stage == Lemma::Stage::identity) {
        if (l.form == w.raw) {
          m.rung = Evidence::exact;
          m.distance = 0;
        } else if (d == 0 || (cross_script(l.form) && d <= res_.theta)) {
          m.rung = Evidence::translit;
          m.distance = d;
        } else if (d <= res_.theta) {
          m.rung = Evidence::edit;
          m.distance = d;
        }
      } else if (l.form == w.raw || d == 0) {
        m.rung = Evidence::lemma;
        m.distance = 0;
      } else if (d <= res_.theta) {
        m.rung = Evidence::edit;
        m.distance = d;
      }
      if (m.rung != Evidence::none && m.better_than(best)) best = m;
    }
    return best;
  }

  Projection make(std::size_t lo, std::size_t hi, Evidence evidence, double score, bool derivational,
                  std::vector<std::size_t> used) const {
    Projection p;
    const std::size_t b = units_[lo].begin;
    const std::size_t e = units_[hi].end;
    p.span = CellSpan{b, e, std::string(text::scalar_substr(cell_, b, e - b))};
    p.evidence = evidence;
    p.score = score;
    p.derivational = derivational;
    std::sort(used.begin(), used.end());
    p.units = std::move(used);
    return p;
  }

  std::optional<Projection> exact_substring() const {
    std::u32string s = text::to_u32(surface_);
    while (!s.empty() && text::is_space(s.back())) s.pop_back();
    std::size_t lead = 0;
    while (lead < s.size() && text::is_space(s[lead])) ++lead;
    s.erase(0, lead);
    if (s.empty()) return std::nullopt;
    const std::u32string c = text::to_u32(cell_);
    for (std::size_t pos = c.find(s); pos != std::u32string::npos; pos = c.find(s, pos + 1)) {
      const std::size_t end = pos + s.size();
      if (is_alnum(s.front()) && pos > 0 && is_alnum(c[pos - 1])) continue;
      if (is_alnum(s.back()) && end < c.size() && is_alnum(c[end])) continue;
      std::vector<std::size_t> used;
      bool free = true;
      for (std::size_t u = 0; u < units_.size(); ++u) {
        if (units_[u].end <= pos || units_[u].begin >= end) continue;
        if (blocked_[u]) free = false;
        used.push_back(u);
      }
      if (!free) continue;
      Projection p;
      p.span = CellSpan{pos, end, text::to_utf8(std::u32string_view(c).substr(pos, s.size()))};
      p.evidence = Evidence::exact;
      p.score = 1.0;
      p.units = std::move(used);
      return p;
    }
    return std::nullopt;
  }

  struct Anchored {
    Projection projection;
    // Every content word of the name was placed.
    bool complete;
  };

  std::optional<Anchored> anchored() const {
    std::vector<const PivotWord*> heads;
    for (const PivotWord& w : words_)
      if (w.capitalized) heads.push_back(&w);
    if (heads.empty())
      for (const PivotWord& w : words_) heads.push_back(&w);
    std::stable_sort(heads.begin(), heads.end(), [](const PivotWord* a, const PivotWord* b) {
      if (a->frequency != b->frequency) return a->frequency < b->frequency;
      return a->folded.size() > b->folded.size();
    });
    for (const PivotWord* head : heads) {
      std::optional<std::size_t> at;
      WordMatch best;
      for (std::size_t u = 0; u < units_.size(); ++u) {
        if (blocked_[u]) continue;
        WordMatch m = match_word(*head, u);
        if (m.rung != Evidence::none && m.better_than(best)) {
          best = m;
          at = u;
        }
      }
      if (!at) continue;

      std::vector<bool> matched(words_.size(), false);
      matched[head->position] = true;
      std::size_t lo = *at;
      std::size_t hi = *at;
      std::vector<std::size_t> used{*at};
      Evidence worst = best.rung;
      double distance = best.distance;
      bool derivational = best.derivational;
      auto try_extend = [&](std::size_t u) {
        if (blocked_[u]) return false;
        std::optional<std::size_t> which;
        WordMatch wm;
        for (const PivotWord& w : words_) {
          if (matched[w.position]) continue;
          WordMatch m = match_word(w, u);
          if (m.rung != Evidence::none && m.better_than(wm)) {
            wm = m;
            which = w.position;
          }
        }
        if (!which) return false;
        matched[*which] = true;
        used.push_back(u);
        worst = std::max(worst, wm.rung);
        distance = std::max(distance, wm.distance);
        derivational = derivational || wm.derivational;
        return true;
      };
      for (bool grew = true; grew;) {
        grew = false;
        if (lo > 0 && try_extend(lo - 1)) {
          --lo;
          grew = true;
        }
        if (hi + 1 < units_.size() && try_extend(hi + 1)) {
          ++hi;
          grew = true;
        }
      }
      bool complete = true;
      for (const PivotWord& w : words_)
        if (!matched[w.position] && !pivot_.function_words.count(text::to_utf8(w.folded))) complete = false;
      return Anchored{make(lo, hi, worst, 1.0 - distance, derivational, std::move(used)), complete};
    }
    return std::nullopt;
  }

  // Target units [u, u + k) equal the lexicon target words, up to inflection.
  bool lexicon_fits(const std::vector<std::u32string>& target, std::size_t u) const {
    if (u + target.size() > units_.size()) return false;
    for (std::size_t k = 0; k < target.size(); ++k) {
      if (blocked_[u + k]) return false;
      const auto wanted = lemma_candidates(text::to_utf8(target[k]), res_.inflection);
      bool ok = false;
      for (const Lemma& have : lemmas_[u + k]) {
        const std::u32string h = romanize(have.form);
        for (const Lemma& want : wanted)
          if (h == romanize(want.form)) ok = true;
      }
      if (!ok) return false;
    }
    return true;
  }

  std::optional<Projection> lexicon() const {
    if (res_.lexicon.empty()) return std::nullopt;
    struct Placement {
      std::size_t first;
      std::size_t count;
      bool via_lexicon;
      double distance;
      bool derivational;
    };
    std::vector<Placement> chosen;
    std::vector<bool> taken = blocked_;
    bool any_lexicon = false;
    auto distance_to_span = [&](std::size_t u) -> std::size_t {
      if (chosen.empty()) return u;
      std::size_t lo = units_.size();
      std::size_t hi = 0;
      for (const Placement& p : chosen) {
        lo = std::min(lo, p.first);
        hi = std::max(hi, p.first + p.count - 1);
      }
      return u < lo ? lo - u : (u > hi ? u - hi : 0);
    };
    for (const PivotWord& w : words_) {
      if (pivot_.function_words.count(text::to_utf8(w.folded))) continue;
      std::optional<Placement> best;
      for (const LexiconEntry& e : res_.lexicon) {
        if (text::fold(text::to_u32(e.source)) != w.folded) continue;
        std::vector<std::u32string> target;
        for (const Unit& t : text_units(e.target)) target.push_back(text::to_u32(t.text));
        if (target.empty()) continue;
        for (std::size_t u = 0; u < units_.size(); ++u) {
          bool clash = false;
          for (std::size_t k = 0; k < target.size() && u + k < units_.size(); ++k) clash = clash || taken[u + k];
          if (clash || !lexicon_fits(target, u)) continue;
          if (!best || distance_to_span(u) < distance_to_span(best->first)) best = Placement{u, target.size(), true, 0, false};
        }
      }
      if (!best) {
        WordMatch bw;
        for (std::size_t u = 0; u < units_.size(); ++u) {
          if (taken[u]) continue;
          WordMatch m = match_word(w, u);
          if (m.rung == Evidence::none) continue;
          if (!best || m.better_than(bw) || (m.key() == bw.key() && distance_to_span(u) < distance_to_span(best->first))) {
            bw = m;
            best = Placement{u, 1, false, m.distance, m.derivational};
          }
        }
      }
      if (!best) return std::nullopt;
      any_lexicon = any_lexicon || best->via_lexicon;
      for (std::size_t k = 0; k < best->count; ++k) taken[best->first + k] = true;
      chosen.push_back(*best);
    }
    if (!any_lexicon) return std::nullopt;
    std::size_t lo = units_.size();
    std::size_t hi = 0;
    std::size_t covered = 0;
    double distance = 0;
    bool derivational = false;
    std::vector<std::size_t> used;
    for (const Placement& p : chosen) {
      lo = std::min(lo, p.first);
      hi = std::max(hi, p.first + p.count - 1);
      covered += p.count;
      distance = std::max(distance, p.distance);
      derivational = derivational || p.derivational;
      for (std::size_t k = 0; k < p.count; ++k) used.push_back(p.first + k);
    }
    constexpr std::size_t kMaxGap = 2;
    if (hi - lo + 1 > covered + kMaxGap) return std::nullopt;
    return make(lo, hi, Evidence::lexicon, 1.0 - distance, derivational, std::move(used));
  }

  std::string_view surface_;
  std::string_view cell_;
  const LanguageResources& res_;
  const PivotContext& pivot_;
  std::vector<Unit> units_;
  std::vector<bool> blocked_;
  std::vector<PivotWord> words_;
  std::vector<std::vector<Lemma>> lemmas_;
};

}  // namespace

Projection project_entity(std::string_view surface, std::string_view cell, const LanguageResources& resources,
                          const PivotContext& pivot, const std::vector<bool>& blocked) {
  return Projector(surface, cell, resources, pivot, blocked).run();
}

ProcedureLabel classify_procedure(const Projection& p, std::string* note) {
  switch (p.evidence) {
    case Evidence::exact: return ProcedureLabel::Borrowing;
    case Evidence::translit:
    case Evidence::lemma:
    case Evidence::edit:
      if (p.derivational) {
        if (note) *note = "possessive adjective";
        return ProcedureLabel::Other;
      }
      return ProcedureLabel::Assimilation;
    case Evidence::lexicon: return ProcedureLabel::Calque;
    case Evidence::none: return ProcedureLabel::Absence;
  }
  return ProcedureLabel::Absence;
}

}  // namespace onomast::transfer
