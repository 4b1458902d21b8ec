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

#include <random>

#include "doctest.h"
#include "onomast/error.hpp"
#include "onomast/transfer/namepair.hpp"

using namespace onomast;
using namespace onomast::transfer;

namespace {

const std::string kResources = std::string(ONOMAST_SOURCE_DIR) + "/resources";

LanguageResources lang(const std::string& code) {
  return load_language_resources(kResources, code, load_bilingual_lexicon(kResources + "/lexicon/bilingual.tsv"));
}

ProcedureLabel label_of(const std::string& surface, const std::string& cell, const LanguageResources& r,
                        std::string* note = nullptr) {
  return classify_procedure(project_entity(surface, cell, r), note);
}

}  // namespace

TEST_CASE("transliteration tables") {
  auto bg = RewriteTable::load(kResources + "/translit/bg.tsv");
  auto sr = RewriteTable::load(kResources + "/translit/sr.tsv");
  auto el = RewriteTable::load(kResources + "/translit/el.tsv");
  CHECK(bg.script() == text::Script::cyrillic);
  CHECK(el.script() == text::Script::greek);
  CHECK(transliterate("Ауда", bg) == "auda");
  CHECK(transliterate("Фикс", bg) == "fiks");
  CHECK(transliterate("", bg) == "");
  CHECK(transliterate("Фог, 1872!", bg) == "fog, 1872!");
  CHECK(transliterate("Щастие", bg) == "shtastie");
  CHECK(transliterate("Љубав", sr) == "ljubav");
  CHECK(transliterate("Ούβρα", el) == "ouvra");
  CHECK(transliterate("Μπομπάη", el) == "bobai");
  CHECK(transliterate("ΦΙΛΈΑΣ", el) == "fileas");

  CHECK(bg.uncovered(U"абвгдежзийклмнопрстуфхцчшщъьюя").empty());
  CHECK(sr.uncovered(U"абвгдђежзијклљмнњопрстћуфхцчџш").empty());
  CHECK(el.uncovered(U"αβγδεζηθικλμνξοπρσςτυφχψωάέήίόύώϊϋΐΰ").empty());
  CHECK(bg.uncovered(U"ђ") == U"ђ");

  std::mt19937 rng(3);
  const std::u32string letters = U"абвгдежзийклмнопрстуфхцчшщъьюяАБВ -";
  for (int i = 0; i < 200; ++i) {
    std::u32string s;
    for (int k = 0; k < 12; ++k) s += letters[rng() % letters.size()];
    const std::string u = text::to_utf8(s);
    CHECK(transliterate(u, bg) == transliterate(u, bg));
    CHECK(text::to_lower(transliterate(u, bg)) == transliterate(u, bg));
  }
}

TEST_CASE("rewrite tables prefer the longest source") {
  auto t = RewriteTable::parse("# comment\nа\tx\nаб\ty\nабв\tz\n");
  CHECK(t.apply("абвАБ") == "zy");
  CHECK_THROWS_AS(RewriteTable::parse("only-one-field\n"), ParseError);
}

TEST_CASE("strip_inflection") {
  auto sr = lang("sr").inflection;
  auto pl = lang("pl").inflection;
  CHECK(strip_inflection("Cromarty'ego", pl).count("Cromarty"));
  CHECK(strip_inflection("Mascarille'a", pl).count("Mascarille"));
  CHECK(strip_inflection("Paspartuovim", sr).count("Paspartu"));
  CHECK(strip_inflection("Paspartuovim", sr).count("Paspartuov"));
  CHECK(strip_inflection("Fogg", InflectionRules{}) == std::set<std::string>{"Fogg"});
  for (const char* form : {"Paspartu", "Paspartua", "Paspartuu", "Paspartuom", "Paspartuov", "Paspartuova",
                           "Paspartuovu", "Paspartuovih", "Paspartuovim"}) {
    CAPTURE(form);
    auto c = strip_inflection(form, sr);
    CHECK(c.count("Paspartu"));
    CHECK(c.count(form));
  }
  // Stems never drop below two characters.
  CHECK(strip_inflection("ima", sr) == std::set<std::string>{"ima", "im"});
  CHECK(strip_inflection("Ui", sr) == std::set<std::string>{"Ui"});

  auto lemmas = lemma_candidates("Paspartuov", sr);
  REQUIRE(lemmas.size() == 2);
  CHECK(lemmas[1] == Lemma{"Paspartu", Lemma::Stage::derivation});

  CHECK_THROWS_AS(InflectionRules::parse("a\t-\n"), ParseError);
  CHECK_THROWS_AS(InflectionRules::parse("[cases]\n"), ParseError);
}

TEST_CASE("edit_distance") {
  // Substitute x->k, insert s: 2 edits over length 4.
  CHECK(edit_distance("fix", "fiks") == 0.5);
  CHECK(edit_distance("Fogg", "fogg") == 0.0);
  CHECK(edit_distance("Élise", "elise") == 0.0);
  CHECK(edit_distance("", "") == 0.0);
  CHECK(edit_distance("", "abc") == 1.0);
  CHECK(edit_distance("aouda", "auda") == doctest::Approx(0.2));
  std::mt19937 rng(5);
  for (int i = 0; i < 200; ++i) {
    std::string a;
    std::string b;
    for (int k = rng() % 8; k > 0; --k) a += static_cast<char>('a' + rng() % 4);
    for (int k = rng() % 8; k > 0; --k) b += static_cast<char>('a' + rng() % 4);
    const double d = edit_distance(a, b);
    CHECK(d >= 0.0);
    CHECK(d <= 1.0);
    CHECK(d == edit_distance(b, a));
    CHECK(edit_distance(a, a) == 0.0);
  }
}

TEST_CASE("project_entity examples") {
  auto en = lang("en");
  Projection fogg = project_entity("Fogg", "Mr. Phileas Fogg lived, in 1872, at No. 7, Saville Row.", en);
  CHECK(fogg.evidence == Evidence::exact);
  REQUIRE(fogg.span);
  CHECK(fogg.span->surface == "Fogg");
  CHECK(fogg.span->begin == 12);

  auto sr = lang("sr");
  Projection fix = project_entity("Fix", "Inspektor Fiks je čekao.", sr);
  CHECK(fix.evidence == Evidence::translit);
  CHECK(fix.span->surface == "Fiks");
  Projection fiksa = project_entity("Fix", "Video je Fiksa.", sr);
  CHECK(fiksa.evidence == Evidence::lemma);
  CHECK(label_of("Fix", "Video je Fiksa.", sr) == ProcedureLabel::Assimilation);

  auto es = lang("es");
  Projection pic = project_entity("Passepartout", "Juan Picaporte era un buen muchacho.", es);
  CHECK(pic.evidence == Evidence::lexicon);
  CHECK(pic.span->surface == "Picaporte");

  Projection multi = project_entity("Phileas Fogg", "Fileas Fog je otišao.", sr);
  CHECK(multi.evidence == Evidence::translit);
  CHECK(multi.span->surface == "Fileas Fog");

  Projection sea = project_entity("mer Rouge", "They crossed the Red Sea at night.", en);
  CHECK(sea.evidence == Evidence::lexicon);
  CHECK(sea.span->surface == "Red Sea");

  Projection club = project_entity("Reform-Club", "members of the Reform Club, though", en);
  CHECK(club.evidence == Evidence::exact);
  CHECK(club.span->surface == "Reform Club");

  PivotContext fr_context;
  fr_context.function_words = {"de"};
  Projection mixed = project_entity("Reform-Club de Londres", "members of the Reform Club of London, though", en,
                                    fr_context);
  CHECK(mixed.evidence == Evidence::lexicon);
  CHECK(mixed.span->surface == "Reform Club of London");
  Projection partial = project_entity("Andrew Stuart", "Stjuart je dobio.", sr);
  CHECK(partial.evidence == Evidence::edit);
  CHECK(partial.span->surface == "Stjuart");

  CHECK(project_entity("Aouda", "Ауда седеше.", lang("bg")).evidence == Evidence::translit);
  CHECK(project_entity("Aouda", "Лейди Ауда", lang("bg")).span->surface == "Ауда");
}

TEST_CASE("classifier examples") {
  std::string note;
  CHECK(label_of("Fogg", "Mr. Phileas Fogg lived", lang("en")) == ProcedureLabel::Borrowing);
  CHECK(label_of("Phileas", "Fileas Fogg mieszkał", lang("pl")) == ProcedureLabel::Assimilation);
  CHECK(label_of("Fix", "Detektiv Fiks", lang("sr")) == ProcedureLabel::Assimilation);
  CHECK(label_of("Aouda", "Ауда", lang("bg")) == ProcedureLabel::Assimilation);
  CHECK(label_of("Aouda", "la giovane Auda", lang("it")) == ProcedureLabel::Assimilation);
  CHECK(label_of("Passepartout", "Picaporte", lang("es")) == ProcedureLabel::Calque);
  CHECK(label_of("Passepartout", "Él lo siguió.", lang("es")) == ProcedureLabel::Absence);
  CHECK(label_of("Paspartu", "Paspartuov kofer", lang("sr"), &note) == ProcedureLabel::Other);
  CHECK(note == "possessive adjective");
  CHECK(label_of("mer Rouge", "across the Red Sea", lang("en")) == ProcedureLabel::Calque);
  CHECK(label_of("Xq7-zz", "Xq7-zz", lang("en")) == ProcedureLabel::Borrowing);
}

TEST_CASE("identical surfaces are borrowings") {
  std::mt19937 rng(11);
  const std::u32string alphabet = U"abcXYZéßжΩ'-., 09";
  for (int i = 0; i < 300; ++i) {
    std::u32string s;
    for (int k = 1 + rng() % 15; k > 0; --k) s += alphabet[rng() % alphabet.size()];
    const std::string surface = text::to_utf8(s);
    bool blank = true;
    for (char32_t c : s) blank = blank && text::is_space(c);
    if (blank) continue;
    for (const char* code : {"en", "sr", "bg", "pl"}) {
      LanguageResources r = lang(code);
      r.lexicon.clear();
      CAPTURE(surface);
      CHECK(label_of(surface, surface, r) == ProcedureLabel::Borrowing);
    }
  }
}

TEST_CASE("exact evidence is stable under lexicon growth") {
  auto en = lang("en");
  const std::string cell = "Mr. Phileas Fogg lived at Saville Row with Passepartout.";
  auto before = project_entity("Passepartout", cell, en);
  CHECK(before.evidence == Evidence::exact);
  en.lexicon.push_back({"en", "passepartout", "Mr"});
  en.lexicon.push_back({"en", "passepartout", "lived"});
  auto after = project_entity("Passepartout", cell, en);
  CHECK(after.evidence == Evidence::exact);
  CHECK(after.span == before.span);
}

TEST_CASE("classify_column and the pair file") {
  using corpus::SegmentId;
  corpus::Paragraph para;
  para.sentences.emplace_back(SegmentId{1, 1, 1}, "Fix suivait Fogg.", " ");
  para.sentences.emplace_back(SegmentId{1, 1, 2}, "Passepartout dormait.", "");
  corpus::Division div;
  div.paragraphs.push_back(para);
  corpus::Document fr("fr", text::Script::latin, {div});
  cascade::AnnotatedDocument pivot{fr, {}};
  auto ann = [](SegmentId s, std::size_t b, std::string surface) {
    return cascade::EntityAnnotation{s, b, b + 1, {"pers.hum", cascade::Hypertype::anthroponym}, std::move(surface)};
  };
  pivot.annotations = {ann({1, 1, 1}, 0, "Fix"), ann({1, 1, 1}, 2, "Fogg"), ann({1, 1, 2}, 0, "Passepartout")};

  corpus::Paragraph tp;
  tp.sentences.emplace_back(SegmentId{1, 1, 1}, "Fiks je pratio Foga.", " ");
  tp.sentences.emplace_back(SegmentId{1, 1, 2}, "On je spavao.", "");
  corpus::Division td;
  td.paragraphs.push_back(tp);
  corpus::Document sr("sr", text::Script::latin, {td});
  aligner::Bitext bt{fr, sr, {{{SegmentId{1, 1, 1}}, {SegmentId{1, 1, 1}}, 0, {}},
                              {{SegmentId{1, 1, 2}}, {SegmentId{1, 1, 2}}, 0, {}}}};
  auto mt = multitext::merge(pivot, {{"SRP", bt}});
  auto pairs = classify_column(mt, 0, lang("sr"), pivot_context(pivot));
  REQUIRE(pairs.size() == 3);
  CHECK(pairs[0].id() == "d1p1s1#0");
  CHECK(pairs[1].id() == "d1p1s1#1");
  CHECK(pairs[0].label == ProcedureLabel::Assimilation);
  CHECK(pairs[0].target->surface == "Fiks");
  CHECK(pairs[1].label == ProcedureLabel::Assimilation);
  CHECK(pairs[1].target->surface == "Foga");
  CHECK(pairs[2].label == ProcedureLabel::Absence);
  CHECK_FALSE(pairs[2].target);
  for (const auto& p : pairs) CHECK((p.label == ProcedureLabel::Absence) == !p.target.has_value());

  const std::string tsv = write_pairs(pairs);
  CHECK(tsv.substr(0, tsv.find('\n')) == kPairsHeader);
  CHECK(read_pairs(tsv) == pairs);
  CHECK(tsv.find("d1p1s1\tFix\tanthroponym\tsr\t0:0-4 Fiks\tAssimilation\ttranslit\t1\t\n") != std::string::npos);

  pairs[2].note = "tab\there";
  pairs[2].label.reset();
  CHECK(read_pairs(write_pairs(pairs)) == pairs);
  CHECK_THROWS_AS(read_pairs("bad header\n"), ParseError);
  CHECK_THROWS_AS(read_pairs(std::string(kPairsHeader) + "\nd1p1s1\tX\tanthroponym\n"), ParseError);
}
