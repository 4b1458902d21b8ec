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

#include "onomast/transfer/rules.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "onomast/error.hpp"

namespace onomast::transfer {

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Splits into lines, dropping '\r', blank lines and '#' comments.
template <typename F>
void for_each_line(std::string_view text, F&& f) {
  int lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    f(line, lineno);
    if (end == text.size()) break;
  }
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t f = 0;
  for (;;) {
    const std::size_t tab = line.find('\t', f);
    out.push_back(line.substr(f, tab - f));
    if (tab == std::string_view::npos) break;
    f = tab + 1;
  }
  return out;
}

}  // namespace

RewriteTable RewriteTable::parse(std::string_view text) {
  RewriteTable t;
  for_each_line(text, [&](std::string_view line, int lineno) {
    auto fields = split_tabs(line);
    if (fields.size() != 2 || fields[0].empty())
      throw ParseError("expected source<TAB>target", lineno);
    t.add(text::to_lower(text::to_u32(fields[0])), text::to_u32(fields[1]));
  });
  return t;
}

RewriteTable RewriteTable::load(const std::filesystem::path& path) { return parse(read_file(path)); }

void RewriteTable::add(std::u32string source, std::u32string target) {
  if (rules_.empty()) script_ = text::dominant_script(source);
  Rule r{std::move(source), std::move(target)};
  auto at = std::find_if(rules_.begin(), rules_.end(),
                         [&](const Rule& x) { return x.source.size() < r.source.size(); });
  rules_.insert(at, std::move(r));
}

std::string RewriteTable::apply(std::string_view input) const {
  const std::u32string s = text::to_lower(text::to_u32(input));
  std::u32string out;
  std::size_t i = 0;
  while (i < s.size()) {
    const Rule* hit = nullptr;
    for (const Rule& r : rules_) {
      if (s.compare(i, r.source.size(), r.source) == 0) {
        hit = &r;
        break;
      }
    }
    if (hit) {
      out += hit->target;
      i += hit->source.size();
    } else {
      out += s[i++];
    }
  }
  return text::to_utf8(text::to_lower(out));
}

std::u32string RewriteTable::uncovered(std::u32string_view alphabet) const {
  std::u32string out;
  for (char32_t c : alphabet) {
    const bool covered = std::any_of(rules_.begin(), rules_.end(),
                                     [&](const Rule& r) { return r.source.size() == 1 && r.source[0] == c; });
    if (!covered) out += c;
  }
  return out;
}

std::string transliterate(std::string_view s, const TransliterationTable& table) { return table.apply(s); }

InflectionRules InflectionRules::parse(std::string_view text) {
  InflectionRules rules;
  std::vector<Rule>* section = nullptr;
  for_each_line(text, [&](std::string_view line, int lineno) {
    if (line.front() == '[') {
      if (line == "[inflection]")
        section = &rules.inflection;
      else if (line == "[derivation]")
        section = &rules.derivation;
      else
        throw ParseError("unknown section " + std::string(line), lineno);
      return;
    }
    if (!section) throw ParseError("rule outside a section", lineno);
    auto fields = split_tabs(line);
    if (fields.size() != 2 || fields[0].empty()) throw ParseError("expected suffix<TAB>replacement", lineno);
    section->push_back({std::string(fields[0]), fields[1] == "-" ? std::string() : std::string(fields[1])});
  });
  return rules;
}

InflectionRules InflectionRules::load(const std::filesystem::path& path) { return parse(read_file(path)); }

namespace {

constexpr std::size_t kMinStem = 2;

void strip_once(const std::string& form, const std::vector<InflectionRules::Rule>& rules, Lemma::Stage stage,
                std::vector<Lemma>& out) {
  for (const auto& r : rules) {
    if (form.size() <= r.suffix.size() || form.compare(form.size() - r.suffix.size(), r.suffix.size(), r.suffix) != 0)
      continue;
    std::string stem = form.substr(0, form.size() - r.suffix.size()) + r.replacement;
    if (text::scalar_length(stem) < kMinStem) continue;
    const bool seen = std::any_of(out.begin(), out.end(), [&](const Lemma& l) { return l.form == stem; });
    if (!seen) out.push_back({std::move(stem), stage});
  }
}

}  // namespace

std::vector<Lemma> lemma_candidates(std::string_view token, const InflectionRules& rules) {
  std::vector<Lemma> out{{std::string(token), Lemma::Stage::identity}};
  const std::string identity(token);
  strip_once(identity, rules.inflection, Lemma::Stage::inflection, out);
  const std::size_t stage_one = out.size();
  for (std::size_t i = 0; i < stage_one; ++i) {
    const std::string form = out[i].form;
    strip_once(form, rules.derivation, Lemma::Stage::derivation, out);
  }
  return out;
}

std::set<std::string> strip_inflection(std::string_view token, const InflectionRules& rules) {
  std::set<std::string> out;
  for (Lemma& l : lemma_candidates(token, rules)) out.insert(std::move(l.form));
  return out;
}

double normalized_levenshtein(std::u32string_view a, std::u32string_view b) {
  if (a.empty() && b.empty()) return 0.0;
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return static_cast<double>(row[b.size()]) / static_cast<double>(std::max(a.size(), b.size()));
}

double edit_distance(std::string_view a, std::string_view b) {
  return normalized_levenshtein(text::fold(text::to_u32(a)), text::fold(text::to_u32(b)));
}

std::vector<LexiconEntry> parse_bilingual_lexicon(std::string_view text) {
  std::vector<LexiconEntry> out;
  for_each_line(text, [&](std::string_view line, int lineno) {
    auto fields = split_tabs(line);
    if (fields.size() != 3 || fields[0].empty() || fields[1].empty() || fields[2].empty())
      throw ParseError("expected lang<TAB>source<TAB>target", lineno);
    out.push_back({std::string(fields[0]), std::string(fields[1]), std::string(fields[2])});
  });
  return out;
}

std::vector<LexiconEntry> load_bilingual_lexicon(const std::filesystem::path& path) {
  return parse_bilingual_lexicon(read_file(path));
}

}  // namespace onomast::transfer
