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

#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "onomast/cascade/cascade.hpp"
#include "onomast/corpus/segment.hpp"
#include "onomast/error.hpp"

using namespace onomast;
using namespace onomast::cascade;
using corpus::Document;
using corpus::SegmentationRules;

namespace {

const std::string kSource = ONOMAST_SOURCE_DIR;

const char* kFigureOneSentence =
    "En l'année 1872, la maison portant le numéro 7 de Saville-row, Burlington Gardens -- maison dans "
    "laquelle Sheridan mourut en 1814 --, était habité par Phileas Fogg, esq., l'un des membres les plus "
    "singuliers et les plus remarquables du Reform-Club de Londres, bien qu'il semblât prendre à tâche de ne "
    "rien faire qui pût attirer l'attention.";

const char* kFigureOneTagged =
    "En l'année 1872, la maison portant le numéro 7 de <ENT type=\"loc.line\">Saville-row</ENT>, <ENT "
    "type=\"loc.line\">Burlington Gardens</ENT> -- maison dans laquelle <ENT type=\"pers.hum\">Sheridan</ENT> "
    "mourut en 1814 --, était habité par <ENT type=\"pers.hum\">Phileas Fogg, esq.</ENT>, l'un des membres les "
    "plus singuliers et les plus remarquables du <ENT type=\"org\">Reform-Club de Londres</ENT>, bien qu'il "
    "semblât prendre à tâche de ne rien faire qui pût attirer l'attention.";

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Cascade demo_cascade() {
  Lexicons lexicons = load_lexicons(kSource + "/resources/lexicons/fr");
  auto grammars = compile_grammar_file(read_file(kSource + "/resources/grammars/demo.grm"), lexicons);
  return Cascade(std::move(grammars), std::move(lexicons));
}

Document one_sentence(const std::string& text) {
  SegmentationRules rules;
  rules.abbreviations = {"esq."};
  return corpus::segment_text(text, "fr", rules);
}

struct Tag {
  std::size_t begin;
  std::size_t end;
  std::string type;
  friend bool operator==(const Tag&, const Tag&) = default;
};

std::vector<Tag> tags_of(const AnnotatedDocument& doc) {
  std::vector<Tag> out;
  for (const auto& a : doc.annotations) out.push_back({a.begin, a.end, a.type.raw});
  return out;
}

Cascade cascade_of(const std::vector<std::string>& rules, Lexicons lexicons = {}) {
  std::vector<LocalGrammar> grammars;
  int line = 1;
  for (const auto& r : rules) grammars.push_back(compile_grammar(r, lexicons, HypertypeMap::defaults(), line++));
  return Cascade(std::move(grammars), std::move(lexicons));
}

}  // namespace

TEST_CASE("hypertype mapping") {
  auto map = HypertypeMap::defaults();
  CHECK(map.resolve("pers.hum") == Hypertype::anthroponym);
  CHECK(map.resolve("org") == Hypertype::anthroponym);
  CHECK(map.resolve("loc.line") == Hypertype::toponym);
  CHECK(map.resolve("prod.vehicle") == Hypertype::ergonym);
  CHECK(map.resolve("event") == Hypertype::pragmonym);
  CHECK(map.resolve("time.date.abs") == Hypertype::pragmonym);
  CHECK_FALSE(map.resolve("unknown").has_value());
  auto rebinned = HypertypeMap::parse("pers\tanthroponym\norg\tergonym\n");
  CHECK(rebinned.resolve("org") == Hypertype::ergonym);
}

TEST_CASE("compile_grammar") {
  SUBCASE("capitalized word before a literal") {
    auto g = compile_grammar("30 @Cap \"mourut\"  => pers.hum(1..1)", {});
    REQUIRE(g.pattern.size() == 2);
    CHECK(g.pattern[0].kind == Atom::Kind::capitalized);
    CHECK(g.pattern[1].kind == Atom::Kind::literal);
    CHECK(g.pattern[1].value == "mourut");
    CHECK(g.capture_first == 0);
    CHECK(g.capture_last == 0);
    CHECK(g.priority == 30);
    CHECK(g.emits.raw == "pers.hum");
    CHECK(g.emits.hypertype == Hypertype::anthroponym);
  }
  SUBCASE("empty capture") {
    CHECK_THROWS_AS(compile_grammar("1 @Cap @Cap => pers.hum(2..1)", {}), GrammarError);
  }
  SUBCASE("capture out of range") {
    CHECK_THROWS_AS(compile_grammar("1 @Cap => pers.hum(1..2)", {}), GrammarError);
  }
  SUBCASE("unknown lexicon") {
    CHECK_THROWS_AS(compile_grammar("1 %firstnames @Cap => pers.hum(1..2)", {}), LexiconError);
  }
  SUBCASE("syntax errors carry a position") {
    try {
      compile_grammar("5 @Cap \"mourut => pers.hum(1..1)", {}, HypertypeMap::defaults(), 7);
      FAIL("expected GrammarError");
    } catch (const GrammarError& e) {
      CHECK(e.line() == 7);
      CHECK(e.column() == 8);
    }
    CHECK_THROWS_AS(compile_grammar("x @Cap => pers.hum(1..1)", {}), GrammarError);
    CHECK_THROWS_AS(compile_grammar("1 @Cap pers.hum(1..1)", {}), GrammarError);
    CHECK_THROWS_AS(compile_grammar("1 @Foo => pers.hum(1..1)", {}), GrammarError);
    CHECK_THROWS_AS(compile_grammar("1 @Cap => nothing(1..1)", {}), GrammarError);
    CHECK_THROWS_AS(compile_grammar("1 <pers> @Cap => pers.hum(1..2)", {}), GrammarError);
  }
  SUBCASE("quantifiers and case-insensitive literals") {
    auto g = compile_grammar("1 \"la\"i @Cap+ \"Street\"? => loc.line(2..3)", {});
    CHECK_FALSE(g.pattern[0].case_sensitive);
    CHECK(g.pattern[1].repeat == Atom::Repeat::one_or_more);
    CHECK(g.pattern[2].repeat == Atom::Repeat::optional);
  }
}

TEST_CASE("Figure 1 sentence tags exactly as published") {
  const Cascade cascade = demo_cascade();
  const Document doc = one_sentence(kFigureOneSentence);
  REQUIRE(doc.size() == 1);
  const AnnotatedDocument tagged = run_cascade(doc, cascade);
  CHECK(render_tagged(tagged) == kFigureOneTagged);
  REQUIRE(tagged.annotations.size() == 5);
  CHECK(tagged.annotations[3].surface == "Phileas Fogg, esq.");
}

TEST_CASE("empty cascade leaves the document untagged") {
  const Document doc = one_sentence(kFigureOneSentence);
  const AnnotatedDocument tagged = run_cascade(doc, Cascade{});
  CHECK(tagged.annotations.empty());
  CHECK(tagged.document == doc);
  CHECK(render_tagged(tagged) == doc.text());
}

// Hand-enumerated firing orders on the 5-token sentence "Aa Bb Cc Dd Ee".
TEST_CASE("conflict resolution: priority, then leftmost, then longest") {
  const Document doc = one_sentence("Aa Bb Cc Dd Ee");
  const std::string pair = "@Cap @Cap => loc(1..2)";
  SUBCASE("one grammar: leftmost matches tile the sentence") {
    CHECK(tags_of(run_cascade(doc, cascade_of({"1 " + pair}))) ==
          std::vector<Tag>{{0, 2, "loc"}, {2, 4, "loc"}});
  }
  SUBCASE("earlier stage claims tokens first") {
    CHECK(tags_of(run_cascade(doc, cascade_of({"1 " + pair, "0 \"Bb\" \"Cc\" => org(1..2)"}))) ==
          std::vector<Tag>{{1, 3, "org"}, {3, 5, "loc"}});
  }
  SUBCASE("equal priority: earlier start wins") {
    CHECK(tags_of(run_cascade(doc, cascade_of({"1 " + pair, "1 \"Bb\" \"Cc\" => org(1..2)"}))) ==
          std::vector<Tag>{{0, 2, "loc"}, {2, 4, "loc"}});
  }
  SUBCASE("equal priority and start: longer wins") {
    CHECK(tags_of(run_cascade(doc, cascade_of({"1 " + pair, "1 \"Aa\" @Cap @Cap => org(1..3)"}))) ==
          std::vector<Tag>{{0, 3, "org"}, {3, 5, "loc"}});
  }
  SUBCASE("equal span: rule order breaks the tie") {
    CHECK(tags_of(run_cascade(doc, cascade_of({"1 \"Dd\" => org(1..1)", "1 \"Dd\" => loc(1..1)"}))) ==
          std::vector<Tag>{{3, 4, "org"}});
  }
  SUBCASE("one-or-more takes the longest run") {
    CHECK(tags_of(run_cascade(doc, cascade_of({"1 @Cap+ \"Ee\" => loc(1..2)"}))) ==
          std::vector<Tag>{{0, 5, "loc"}});
  }
  SUBCASE("tagged tokens are opaque except to entity atoms") {
    CHECK(tags_of(run_cascade(doc, cascade_of({"0 \"Cc\" => pers.hum(1..1)", "1 @Cap+ => loc(1..1)",
                                                 "1 <pers> @Cap => org(2..2)"}))) ==
          std::vector<Tag>{{0, 2, "loc"}, {2, 3, "pers.hum"}, {3, 5, "loc"}});
    CHECK(tags_of(run_cascade(doc, cascade_of({"0 \"Cc\" => pers.hum(1..1)", "1 <pers> @Cap => org(2..2)"}))) ==
          std::vector<Tag>{{2, 3, "pers.hum"}, {3, 4, "org"}});
  }
}

TEST_CASE("render_tagged and parse_tagged") {
  const Cascade cascade = demo_cascade();
  SUBCASE("single annotation") {
    const Document doc = one_sentence("Sheridan mourut.");
    auto tagged = run_cascade(doc, cascade);
    CHECK(render_tagged(tagged) == "<ENT type=\"pers.hum\">Sheridan</ENT> mourut.");
  }
  SUBCASE("round trip recovers the annotation set") {
    const Document doc = one_sentence(kFigureOneSentence);
    auto tagged = run_cascade(doc, cascade);
    auto parsed = parse_tagged(render_tagged(tagged), doc);
    CHECK(parsed.annotations == tagged.annotations);
  }
  SUBCASE("mismatched text or broken tags are rejected") {
    const Document doc = one_sentence("Sheridan mourut.");
    CHECK_THROWS_AS(parse_tagged("Sheridan partit.", doc), ParseError);
    CHECK_THROWS_AS(parse_tagged("<ENT type=\"pers.hum\">Sheridan mourut.", doc), ParseError);
    CHECK_THROWS_AS(parse_tagged("<ENT type=\"pers.hum\">Sher</ENT>idan mourut.", doc), ParseError);
  }
}

TEST_CASE("coverage_stats") {
  SUBCASE("no annotations") {
    auto stats = coverage_stats(run_cascade(one_sentence("Rien ici."), Cascade{}));
    CHECK(stats.np_char_fraction == 0.0);
    CHECK(stats.np_word_fraction == 0.0);
    CHECK(stats.occurrences_total == 0);
    CHECK(stats.occurrences_distinct == 0);
  }
  SUBCASE("one two-word name among ten words") {
    const Document doc = one_sentence("un deux trois quatre cinq six sept huit Aa Bb");
    auto stats = coverage_stats(run_cascade(doc, cascade_of({"1 \"Aa\" \"Bb\" => pers.hum(1..2)"})));
    CHECK(stats.np_word_fraction == doctest::Approx(0.2));
    // 4 of 36 non-space characters.
    CHECK(stats.np_char_fraction == doctest::Approx(4.0 / 36.0));
    CHECK(stats.occurrences_total == 1);
  }
  SUBCASE("distinct on exact surface") {
    const Document doc = one_sentence("Fogg et Fogg et fogg.");
    auto stats = coverage_stats(run_cascade(doc, cascade_of({"1 \"Fogg\"i => pers.hum(1..1)"})));
    CHECK(stats.occurrences_total == 3);
    CHECK(stats.occurrences_distinct == 2);
  }
}

TEST_CASE("cascade properties on random rules and sentences") {
  const std::vector<std::string> words = {"Aa", "Bb", "cc", "dd", "Ee", "1", ",", "de"};
  const std::vector<std::string> atoms = {"@Cap", "@Word", "@Num", "\"de\"", "\"cc\"i", "@Cap+", "\"Bb\"?",
                                          "%names"};
  const std::vector<std::string> types = {"pers.hum", "loc", "org", "prod"};
  Lexicons lexicons{{"names", {"Aa", "Ee"}}};
  std::mt19937 rng(31);
  auto pick = [&](const auto& v) { return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)]; };
  for (int trial = 0; trial < 300; ++trial) {
    std::string sentence;
    const int n = std::uniform_int_distribution<int>(1, 12)(rng);
    for (int i = 0; i < n; ++i) sentence += pick(words) + " ";
    const Document doc = one_sentence(sentence);
    std::vector<std::string> rules;
    const int n_rules = std::uniform_int_distribution<int>(1, 5)(rng);
    for (int r = 0; r < n_rules; ++r) {
      const int len = std::uniform_int_distribution<int>(1, 3)(rng);
      std::string rule = std::to_string(std::uniform_int_distribution<int>(0, 2)(rng));
      for (int a = 0; a < len; ++a) rule += " " + pick(atoms);
      const int first = std::uniform_int_distribution<int>(1, len)(rng);
      const int last = std::uniform_int_distribution<int>(first, len)(rng);
      rule += " => " + pick(types) + "(" + std::to_string(first) + ".." + std::to_string(last) + ")";
      rules.push_back(rule);
    }
    const Cascade cascade = cascade_of(rules, lexicons);
    const auto tagged = run_cascade(doc, cascade);

    // Non-overlap and non-empty spans.
    for (std::size_t i = 0; i < tagged.annotations.size(); ++i) {
      CHECK(tagged.annotations[i].begin < tagged.annotations[i].end);
      if (i > 0 && tagged.annotations[i].segment == tagged.annotations[i - 1].segment)
        CHECK(tagged.annotations[i - 1].end <= tagged.annotations[i].begin);
    }
    // Determinism.
    CHECK(run_cascade(doc, cascade).annotations == tagged.annotations);
    // Render/parse identity.
    CHECK(parse_tagged(render_tagged(tagged), doc).annotations == tagged.annotations);

    // Deleting a rule: stages that fire before it are untouched, and a rule
    // that never fired changes nothing.
    const std::size_t victim = std::uniform_int_distribution<std::size_t>(0, rules.size() - 1)(rng);
    std::vector<std::string> reduced_rules = rules;
    reduced_rules.erase(reduced_rules.begin() + static_cast<long>(victim));
    const int victim_priority = std::stoi(rules[victim]);
    const auto reduced = run_cascade(doc, cascade_of(reduced_rules, lexicons));
    std::vector<std::string> earlier;
    for (const auto& r : rules)
      if (std::stoi(r) < victim_priority) earlier.push_back(r);
    const auto prefix = tags_of(run_cascade(doc, cascade_of(earlier, lexicons)));
    const auto reduced_tags = tags_of(reduced);
    for (const Tag& t : prefix)
      CHECK(std::find(reduced_tags.begin(), reduced_tags.end(), t) != reduced_tags.end());

    std::vector<std::string> marked = rules;
    const auto arrow = marked[victim].find("=> ");
    const auto paren = marked[victim].find('(', arrow);
    marked[victim] = marked[victim].substr(0, arrow + 3) + "event.victim" + marked[victim].substr(paren);
    const auto marked_run = tags_of(run_cascade(doc, cascade_of(marked, lexicons)));
    const bool fired = std::any_of(marked_run.begin(), marked_run.end(),
                                   [](const Tag& t) { return t.type == "event.victim"; });
    if (!fired) CHECK(reduced_tags == tags_of(tagged));
  }
}
