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

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "doctest.h"
#include "onomast/aligner/align.hpp"
#include "onomast/cascade/cascade.hpp"
#include "onomast/corpus/segment.hpp"
#include "onomast/error.hpp"
#include "onomast/multitext/multitext.hpp"

using namespace onomast;
using namespace onomast::multitext;
using aligner::AlignmentLink;
using aligner::Bitext;
using corpus::Document;
using corpus::SegmentId;

namespace {

const std::string kSource = ONOMAST_SOURCE_DIR;

const char* kFigureOneSentence =
    "En l'année 1872, la maison portant le numéro 7 de Saville-row, Burlington Gardens -- maison dans "
    "laquelle Sheridan mourut en 1814 --, était habité par Phileas Fogg, esq., l'un des membres les plus "
    "singuliers et les plus remarquables du Reform-Club de Londres, bien qu'il semblât prendre à tâche de ne "
    "rien faire qui pût attirer l'attention.";

const char* kFigureFourBulgarian =
    "През 1872 година в къщата на \"Савил роу\" № 7, Бърлингтън Гардънс – същата, в която през 1814 година "
    "почина Шеридан, – сега живееше Филиас Фог. Той беше един от най-странните и видни членове на "
    "Реформаторския лондонски клуб, въпреки че сякаш се стараеше да не привлича вниманието.";

const char* kFigureFourEnglish =
    "Mr. Phileas Fogg lived, in 1872, at No. 7, Saville Row, Burlington Gardens, the house in which Sheridan "
    "died in 1814. He was one of the most noticeable members of the Reform Club, though he seemed always to "
    "avoid attracting attention.";

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

cascade::Cascade demo_cascade() {
  auto lexicons = cascade::load_lexicons(kSource + "/resources/lexicons/fr");
  auto grammars = cascade::compile_grammar_file(read_file(kSource + "/resources/grammars/demo.grm"), lexicons);
  return cascade::Cascade(std::move(grammars), std::move(lexicons));
}

Document flat_doc(const std::vector<std::string>& texts, const std::string& lang) {
  corpus::Paragraph para;
  int s = 0;
  for (const auto& t : texts) para.sentences.emplace_back(SegmentId{1, 1, ++s}, t, " ");
  corpus::Division div;
  div.paragraphs.push_back(std::move(para));
  return Document(lang, text::Script::latin, {std::move(div)});
}

SegmentId sid(int s) { return SegmentId{1, 1, s}; }

AlignmentLink link(std::vector<int> p, std::vector<int> t) {
  AlignmentLink l;
  for (int x : p) l.pivot.push_back(sid(x));
  for (int x : t) l.target.push_back(sid(x));
  return l;
}

cascade::AnnotatedDocument bare(const Document& d) { return {d, {}}; }

std::vector<std::vector<std::size_t>> pivot_rows(const Multitext& mt) {
  std::vector<std::vector<std::size_t>> out;
  for (const Row& r : mt.rows) out.push_back(r.pivot);
  return out;
}

}  // namespace

TEST_CASE("merge row partitions") {
  Document pivot = flat_doc({"P1.", "P2.", "P3.", "P4."}, "fr");
  Document a = flat_doc({"A1.", "A2.", "A3."}, "en");
  Document b = flat_doc({"B1.", "B2.", "B3.", "B4.", "B5."}, "de");

  SUBCASE("zero bitexts") {
    Multitext mt = merge(bare(pivot), {});
    CHECK(pivot_rows(mt) == std::vector<std::vector<std::size_t>>{{0}, {1}, {2}, {3}});
    CHECK(export_table(mt, TableFormat::tsv) == "PIVOT-NP\nP1.\nP2.\nP3.\nP4.\n");
  }
  SUBCASE("all 1:1") {
    Document c = flat_doc({"C1.", "C2.", "C3.", "C4."}, "en");
    Bitext bt{pivot, c, {link({1}, {1}), link({2}, {2}), link({3}, {3}), link({4}, {4})}};
    Multitext mt = merge(bare(pivot), {{"ENG", bt}});
    CHECK(mt.rows.size() == 4);
    CHECK(mt.cell(2, 0) == "C3.");
  }
  SUBCASE("closure over two columns") {
    // A: {1,2}:{1}, 3:2, 4:3.  B: 1:1, 2:{2,3}, 3:4, 0:1 (B5 after s3), 4:- ... B5 attaches to s3's row.
    Bitext ba{pivot, a, {link({1, 2}, {1}), link({3}, {2}), link({4}, {3})}};
    Bitext bb{pivot, b, {link({1}, {1}), link({2}, {2, 3}), link({3}, {4}), link({}, {5}), link({4}, {})}};
    Multitext mt = merge(bare(pivot), {{"A", ba}, {"B", bb}});
    CHECK(pivot_rows(mt) == std::vector<std::vector<std::size_t>>{{0, 1}, {2}, {3}});
    CHECK(mt.pivot_cell(0) == "P1. P2.");
    CHECK(mt.cell(0, 0) == "A1.");
    CHECK(mt.cell(0, 1) == "B1. B2. B3.");
    CHECK(mt.cell(1, 1) == "B4. B5.");
    CHECK(mt.cell(2, 1) == "");

    // Order independence: same rows, cells follow the columns.
    Multitext swapped = merge(bare(pivot), {{"B", bb}, {"A", ba}});
    CHECK(pivot_rows(swapped) == pivot_rows(mt));
    for (std::size_t r = 0; r < mt.rows.size(); ++r) {
      CHECK(swapped.cell(r, 0) == mt.cell(r, 1));
      CHECK(swapped.cell(r, 1) == mt.cell(r, 0));
    }
  }
  SUBCASE("leading omission attaches to the first row") {
    Bitext bb{pivot, b, {link({}, {1}), link({1}, {2}), link({2}, {3}), link({3}, {4}), link({4}, {5})}};
    Multitext mt = merge(bare(pivot), {{"B", bb}});
    CHECK(mt.cell(0, 0) == "B1. B2.");
  }
  SUBCASE("errors") {
    Bitext other{flat_doc({"P1.", "P2.", "P3.", "X."}, "fr"), a, {}};
    CHECK_THROWS_AS(merge(bare(pivot), {{"A", other}}), PivotMismatch);
    Bitext gap{pivot, a, {link({1, 2}, {1}), link({3}, {2}), link({4}, {})}};
    try {
      merge(bare(pivot), {{"A", gap}});
      FAIL("expected InvalidBitext");
    } catch (const InvalidBitext& e) {
      REQUIRE(e.violations().size() == 1);
      CHECK(e.violations()[0].find("Gap target d1p1s3") == 0);
    }
  }
}

TEST_CASE("three-version excerpt of the first sentence") {
  corpus::SegmentationRules fr_rules;
  fr_rules.abbreviations = {"esq."};
  corpus::SegmentationRules en_rules;
  en_rules.abbreviations = {"Mr.", "No."};
  Document fr = corpus::segment_text(kFigureOneSentence, "fr", fr_rules);
  Document bg = corpus::segment_text(kFigureFourBulgarian, "bg", {});
  Document en = corpus::segment_text(kFigureFourEnglish, "en", en_rules);
  auto tagged = cascade::run_cascade(fr, demo_cascade());
  aligner::CostParams params;
  Multitext mt = merge(tagged, {{"BUL", aligner::align_bitext(fr, bg, params)},
                                {"ENG1", aligner::align_bitext(fr, en, params)}});
  const std::string tsv = export_table(mt, TableFormat::tsv);
  Table t = import_table(tsv);
  CHECK(t.header == std::vector<std::string>{"PIVOT-NP", "BUL", "ENG1"});
  REQUIRE(t.rows.size() == 1);
  CHECK(t.rows[0][0].find("<ENT type=\"loc.line\">Saville-row</ENT>") != std::string::npos);
  CHECK(t.rows[0][2] == kFigureFourEnglish);
  CHECK(t == to_table(mt));

  const std::string html = export_table(mt, TableFormat::html);
  CHECK(html.find("<th>PIVOT-NP</th><th>BUL</th><th>ENG1</th>") != std::string::npos);
  CHECK(html.find("<mark class=\"ent\" data-type=\"loc.line\" title=\"loc.line\">Saville-row</mark>") !=
        std::string::npos);

  auto hits = query(mt, {"anthroponym", std::nullopt});
  REQUIRE(hits.size() == 1);
  std::vector<std::string> surfaces;
  for (const auto* a : hits[0].matches) surfaces.push_back(a->surface);
  CHECK(std::find(surfaces.begin(), surfaces.end(), "Sheridan") != surfaces.end());
  CHECK(std::find(surfaces.begin(), surfaces.end(), "Phileas Fogg, esq.") != surfaces.end());
  CHECK(hits[0].cells.size() == 2);

  CHECK(query(mt, {std::nullopt, std::string("^Z")}).empty());
  CHECK(query(mt, {std::string("loc.line"), std::string("Saville")}).size() == 1);
  CHECK(query(mt, {std::string("loc"), std::nullopt}).size() == 1);
  CHECK(query(mt, {std::string("pers.hum"), std::string("^Sheridan$")})[0].matches.size() == 1);
  CHECK_THROWS_AS(query(mt, {std::nullopt, std::string("(")}), QueryError);
}

TEST_CASE("empty multitext exports a header only") {
  Multitext mt = merge(bare(Document("fr", text::Script::latin, {})), {});
  CHECK(export_table(mt, TableFormat::tsv) == "PIVOT-NP\n");
  CHECK(import_table("PIVOT-NP\n").rows.empty());
}

TEST_CASE("cell escaping round-trips") {
  for (std::string s : {"a\tb", "line\nbreak", "back\\slash", "\\t literal", "cr\r", "", "\\"})
    CHECK(unescape_cell(escape_cell(s)) == s);
  CHECK(escape_cell("a\tb") == "a\\tb");
  CHECK_THROWS_AS(import_table("FRA\tENG\n"), ParseError);
  CHECK_THROWS_AS(import_table("PIVOT-NP\tENG\nonly one\n"), ParseError);
}

TEST_CASE("merge properties on random bitexts") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> count(1, 12);
  std::uniform_int_distribution<int> words(1, 14);
  std::uniform_int_distribution<int> letter(0, 25);
  auto sentence = [&] {
    std::string s;
    const int n = words(rng);
    for (int w = 0; w < n; ++w) {
      if (w) s += rng() % 9 == 0 ? "\t" : " ";
      for (int k = 0; k < 2 + letter(rng) % 6; ++k) s += static_cast<char>('a' + letter(rng));
    }
    return s + ".";
  };
  aligner::CostParams params;
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::string> pt;
    for (int k = count(rng); k > 0; --k) pt.push_back(sentence());
    Document pivot = flat_doc(pt, "fr");
    std::vector<LabeledBitext> bitexts;
    const int columns = 1 + trial % 4;
    for (int c = 0; c < columns; ++c) {
      std::vector<std::string> tt;
      for (int k = count(rng); k > 0; --k) tt.push_back(sentence());
      Document target = flat_doc(tt, "xx");
      bitexts.push_back({"C" + std::to_string(c), aligner::align_bitext(pivot, target, params)});
    }
    Multitext mt = merge(bare(pivot), bitexts);

    // Every target sentence sits in exactly one cell, in order.
    for (std::size_t c = 0; c < bitexts.size(); ++c) {
      std::vector<std::size_t> seen;
      for (const Row& r : mt.rows) seen.insert(seen.end(), r.cells[c].begin(), r.cells[c].end());
      std::vector<std::size_t> expected(bitexts[c].bitext.target.size());
      std::iota(expected.begin(), expected.end(), 0);
      CHECK(seen == expected);
    }
    // Every pivot sentence sits in exactly one row.
    std::size_t pivots = 0;
    for (const Row& r : mt.rows) pivots += r.pivot.size();
    CHECK(pivots == pivot.size());

    auto reversed = bitexts;
    std::reverse(reversed.begin(), reversed.end());
    Multitext mr = merge(bare(pivot), reversed);
    REQUIRE(mr.rows.size() == mt.rows.size());
    for (std::size_t r = 0; r < mt.rows.size(); ++r)
      for (std::size_t c = 0; c < bitexts.size(); ++c) CHECK(mr.cell(r, bitexts.size() - 1 - c) == mt.cell(r, c));

    CHECK(import_table(export_table(mt, TableFormat::tsv)) == to_table(mt));
  }
}
