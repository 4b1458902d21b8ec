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

#include "onomast/multitext/multitext.hpp"

#include <algorithm>
#include <numeric>
#include <regex>

#include "onomast/cascade/cascade.hpp"
#include "onomast/corpus/tei.hpp"
#include "onomast/error.hpp"
#include "onomast/util/hash.hpp"

namespace onomast::multitext {

using corpus::Document;

std::string pivot_hash(const Document& pivot) { return util::sha256_hex(corpus::serialize_tei(pivot)); }

std::string Multitext::pivot_cell(std::size_t row) const {
  std::string out;
  for (std::size_t i : rows.at(row).pivot) {
    const corpus::Sentence& s = pivot.document.sentence(i);
    if (!out.empty()) out += ' ';
    out += cascade::render_tagged(s, pivot.in_sentence(s.id()));
  }
  return out;
}

std::string Multitext::cell(std::size_t row, std::size_t column) const {
  std::string out;
  const Document& doc = columns.at(column).document;
  for (std::size_t i : rows.at(row).cells.at(column)) {
    if (!out.empty()) out += ' ';
    out += doc.sentence(i).text();
  }
  return out;
}

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

std::vector<std::size_t> indices(const Document& doc, const std::vector<corpus::SegmentId>& ids) {
  std::vector<std::size_t> out;
  for (const auto& id : ids) out.push_back(*doc.index_of(id));
  return out;
}

}  // namespace

Multitext merge(cascade::AnnotatedDocument pivot, std::vector<LabeledBitext> bitexts) {
  Multitext mt;
  mt.pivot_hash = pivot_hash(pivot.document);
  for (const LabeledBitext& b : bitexts) {
    if (pivot_hash(b.bitext.pivot) != mt.pivot_hash)
      throw PivotMismatch("bitext '" + b.label + "' was aligned against a different pivot");
    auto violations = aligner::validate_links(b.bitext);
    if (!violations.empty()) {
      std::vector<std::string> described;
      for (const auto& v : violations) described.push_back(v.describe());
      throw InvalidBitext("bitext '" + b.label + "' has " + std::to_string(described.size()) + " link violations",
                          std::move(described));
    }
  }

  const Document& doc = pivot.document;
  const std::size_t n = doc.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (const LabeledBitext& b : bitexts)
    for (const auto& l : b.bitext.links) {
      auto ps = indices(doc, l.pivot);
      for (std::size_t k = 1; k < ps.size(); ++k) parent[find_root(parent, ps[k])] = find_root(parent, ps[0]);
    }
  // Links are monotone, so each class is a contiguous run.
  std::vector<std::size_t> row_of(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0 || find_root(parent, i) != find_root(parent, i - 1)) mt.rows.push_back({});
    mt.rows.back().pivot.push_back(i);
    row_of[i] = mt.rows.size() - 1;
  }
  for (Row& r : mt.rows) r.cells.resize(bitexts.size());

  for (std::size_t c = 0; c < bitexts.size(); ++c) {
    const aligner::Bitext& b = bitexts[c].bitext;
    std::size_t current = 0;
    for (const auto& l : b.links) {
      if (!l.pivot.empty()) current = row_of[*doc.index_of(l.pivot.front())];
      if (mt.rows.empty()) break;
      for (std::size_t t : indices(b.target, l.target)) mt.rows[current].cells[c].push_back(t);
    }
    for (Row& r : mt.rows) std::sort(r.cells[c].begin(), r.cells[c].end());
    mt.columns.push_back({bitexts[c].label, b.target.lang(), b.target, b.links});
  }
  mt.pivot = std::move(pivot);
  return mt;
}

Table to_table(const Multitext& mt) {
  Table t;
  t.header.push_back(kPivotHeader);
  for (const Column& c : mt.columns) t.header.push_back(c.label);
  for (std::size_t r = 0; r < mt.rows.size(); ++r) {
    std::vector<std::string> row{mt.pivot_cell(r)};
    for (std::size_t c = 0; c < mt.columns.size(); ++c) row.push_back(mt.cell(r, c));
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string escape_cell(std::string_view cell) {
  std::string out;
  for (char ch : cell) {
    switch (ch) {
      case '\\': out += "\\\\"; break;
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      default: out += ch;
    }
  }
  return out;
}

std::string unescape_cell(std::string_view cell) {
  std::string out;
  for (std::size_t i = 0; i < cell.size(); ++i) {
    if (cell[i] != '\\' || i + 1 == cell.size()) {
      out += cell[i];
      continue;
    }
    switch (cell[++i]) {
      case 't': out += '\t'; break;
      case 'n': out += '\n'; break;
      case 'r': out += '\r'; break;
      case '\\': out += '\\'; break;
      default:
        out += '\\';
        out += cell[i];
    }
  }
  return out;
}

namespace {

std::string tsv_line(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += '\t';
    out += escape_cell(cells[i]);
  }
  return out + '\n';
}

std::string html_escape(std::string_view s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

std::string html_pivot_cell(const Multitext& mt, std::size_t row) {
  std::string out;
  for (std::size_t i : mt.rows[row].pivot) {
    const corpus::Sentence& s = mt.pivot.document.sentence(i);
    if (!out.empty()) out += ' ';
    const std::string& text = s.text();
    std::size_t at = 0;
    for (const cascade::EntityAnnotation* a : mt.pivot.in_sentence(s.id())) {
      const std::string_view span = s.span_text(a->begin, a->end);
      const auto b = static_cast<std::size_t>(span.data() - text.data());
      out += html_escape(std::string_view(text).substr(at, b - at));
      out += "<mark class=\"ent\" data-type=\"" + html_escape(a->type.raw) + "\" title=\"" +
             html_escape(a->type.raw) + "\">" + html_escape(span) + "</mark>";
      at = b + span.size();
    }
    out += html_escape(std::string_view(text).substr(at));
  }
  return out;
}

std::string export_html(const Multitext& mt) {
  std::string out =
      "<!DOCTYPE html>\n<html><head><meta charset=\"utf-8\"><title>multitext</title>\n"
      "<style>table{border-collapse:collapse}td,th{border:1px solid #999;padding:4px;vertical-align:top}"
      "mark.ent{background:#fde68a}</style></head><body>\n<table>\n<tr><th>";
  out += kPivotHeader;
  out += "</th>";
  for (const Column& c : mt.columns) out += "<th>" + html_escape(c.label) + "</th>";
  out += "</tr>\n";
  for (std::size_t r = 0; r < mt.rows.size(); ++r) {
    out += "<tr><td>" + html_pivot_cell(mt, r) + "</td>";
    for (std::size_t c = 0; c < mt.columns.size(); ++c) out += "<td>" + html_escape(mt.cell(r, c)) + "</td>";
    out += "</tr>\n";
  }
  return out + "</table>\n</body></html>\n";
}

}  // namespace

std::string export_table(const Multitext& mt, TableFormat format) {
  if (format == TableFormat::html) return export_html(mt);
  const Table t = to_table(mt);
  std::string out = tsv_line(t.header);
  for (const auto& row : t.rows) out += tsv_line(row);
  return out;
}

Table import_table(std::string_view tsv) {
  Table t;
  std::size_t start = 0;
  int line = 0;
  while (start < tsv.size()) {
    std::size_t end = tsv.find('\n', start);
    if (end == std::string_view::npos) end = tsv.size();
    std::string_view l = tsv.substr(start, end - start);
    start = end + 1;
    ++line;
    std::vector<std::string> cells;
    std::size_t f = 0;
    for (;;) {
      const std::size_t tab = l.find('\t', f);
      cells.push_back(unescape_cell(l.substr(f, tab - f)));
      if (tab == std::string_view::npos) break;
      f = tab + 1;
    }
    if (line == 1) {
      if (cells.empty() || cells[0] != kPivotHeader) throw ParseError("table must start with a PIVOT-NP header", 1);
      t.header = std::move(cells);
    } else {
      if (cells.size() != t.header.size())
        throw ParseError("expected " + std::to_string(t.header.size()) + " cells, found " +
                             std::to_string(cells.size()),
                         line);
      t.rows.push_back(std::move(cells));
    }
  }
  if (line == 0) throw ParseError("empty table", 1);
  return t;
}

std::vector<QueryHit> query(const Multitext& mt, const Query& q) {
  std::optional<std::regex> pattern;
  if (q.surface) {
    try {
      pattern.emplace(*q.surface, std::regex::ECMAScript);
    } catch (const std::regex_error& e) {
      throw QueryError("invalid surface pattern '" + *q.surface + "': " + e.what());
    }
  }
  std::optional<cascade::Hypertype> hyper;
  if (q.type) {
    for (cascade::Hypertype h : cascade::kHypertypes)
      if (*q.type == cascade::hypertype_name(h)) hyper = h;
  }
  auto accepts = [&](const cascade::EntityAnnotation& a) {
    if (q.type && !(hyper ? a.type.hypertype == *hyper : a.type.matches(*q.type))) return false;
    if (pattern && !std::regex_search(a.surface, *pattern)) return false;
    return true;
  };

  std::vector<QueryHit> hits;
  for (std::size_t r = 0; r < mt.rows.size(); ++r) {
    QueryHit hit;
    hit.row = r;
    for (std::size_t i : mt.rows[r].pivot)
      for (const cascade::EntityAnnotation* a : mt.pivot.in_sentence(mt.pivot.document.sentence(i).id()))
        if (accepts(*a)) hit.matches.push_back(a);
    if (hit.matches.empty()) continue;
    hit.pivot_cell = mt.pivot_cell(r);
    for (std::size_t c = 0; c < mt.columns.size(); ++c) hit.cells.push_back(mt.cell(r, c));
    hits.push_back(std::move(hit));
  }
  return hits;
}

}  // namespace onomast::multitext
