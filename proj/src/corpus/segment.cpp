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

#include "onomast/corpus/segment.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>
#include <unordered_set>

#include "onomast/error.hpp"

namespace onomast::corpus {

namespace {

using text::is_space;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool is_terminal(char32_t c) { return c == U'.' || c == U'!' || c == U'?' || c == U'…'; }

bool is_closer(char32_t c) {
  return c == U'"' || c == U'»' || c == U'”' || c == U'’' || c == U'\'' || c == U')' || c == U']';
}

bool is_opener(char32_t c) {
  return c == U'"' || c == U'«' || c == U'“' || c == U'‘' || c == U'„' || c == U'\'';
}

bool is_inline_space(char32_t c) { return c == U' ' || c == U' ' || c == U' '; }

struct Span {
  std::size_t begin;
  std::size_t end;
};

// Sentence spans within one paragraph block, in scalar offsets.
std::vector<Span> split_sentences(const std::u32string& text,
                                  const std::unordered_set<std::u32string>& abbreviations) {
  std::vector<Span> spans;
  const std::size_t n = text.size();
  std::size_t start = 0;
  std::size_t i = 0;
  while (i < n) {
    if (!is_terminal(text[i])) {
      ++i;
      continue;
    }
    const std::size_t terminal_begin = i;
    std::size_t j = i;
    while (j < n && is_terminal(text[j])) ++j;
    const bool single_period = j - terminal_begin == 1 && text[terminal_begin] == U'.';
    // Closing quotes/brackets, allowing French spacing before them.
    for (;;) {
      std::size_t k = j;
      while (k < n && is_inline_space(text[k])) ++k;
      if (k < n && is_closer(text[k]) && (k == j || text[k] == U'»')) {
        j = k + 1;
      } else {
        break;
      }
    }
    std::size_t next = j;
    while (next < n && is_space(text[next])) ++next;
    const bool followed_by_space = next > j;
    const bool opener_follows =
        next < n && (text::is_upper(text[next]) || is_opener(text[next]) || text[next] == U'—');
    bool split = followed_by_space && opener_follows;
    if (split && single_period) {
      std::size_t w = terminal_begin;
      while (w > start && !is_space(text[w - 1])) --w;
      while (w < terminal_begin && (is_opener(text[w]) || text[w] == U'(')) ++w;
      std::u32string word = text.substr(w, terminal_begin + 1 - w);
      if (abbreviations.count(word) > 0) split = false;
    }
    if (split) {
      spans.push_back({start, j});
      start = next;
      i = next;
    } else {
      i = j;
    }
  }
  if (start < n) {
    std::size_t end = n;
    while (end > start && is_space(text[end - 1])) --end;
    if (end > start) spans.push_back({start, end});
  }
  return spans;
}

struct Block {
  std::size_t begin;  // first non-space scalar
  std::size_t end;    // one past the last non-space scalar
};

// Blocks of non-blank lines separated by blank lines.
std::vector<Block> split_blocks(const std::u32string& text) {
  std::vector<Block> blocks;
  std::size_t line_begin = 0;
  std::optional<Block> current;
  const std::size_t n = text.size();
  while (line_begin <= n) {
    std::size_t line_end = text.find(U'\n', line_begin);
    if (line_end == std::u32string::npos) line_end = n;
    std::size_t first = line_begin;
    while (first < line_end && is_space(text[first])) ++first;
    if (first == line_end) {
      if (current) blocks.push_back(*current);
      current.reset();
    } else {
      std::size_t last = line_end;
      while (last > first && is_space(text[last - 1])) --last;
      if (!current) current = Block{first, last};
      current->end = last;
    }
    if (line_end == n) break;
    line_begin = line_end + 1;
  }
  if (current) blocks.push_back(*current);
  return blocks;
}

}  // namespace

SegmentationRules parse_segmentation_rules(std::string_view content) {
  SegmentationRules rules;
  std::vector<std::string>* section = &rules.abbreviations;
  std::istringstream in{std::string(content)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view entry = trim(line);
    if (entry.empty() || entry.front() == '#') continue;
    if (entry == "[abbreviations]") {
      section = &rules.abbreviations;
    } else if (entry == "[divisions]") {
      section = &rules.division_markers;
    } else if (entry.front() == '[') {
      throw ParseError("unknown section " + std::string(entry), lineno);
    } else {
      section->emplace_back(entry);
    }
  }
  for (const std::string& pattern : rules.division_markers) {
    try {
      std::regex check(pattern);
    } catch (const std::regex_error& e) {
      throw ConfigError("bad division marker '" + pattern + "': " + e.what());
    }
  }
  return rules;
}

SegmentationRules load_segmentation_rules(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read segmentation rules " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_segmentation_rules(buf.str());
}

std::string normalize_source(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] == '\r') {
      out.push_back('\n');
      if (i + 1 < raw.size() && raw[i + 1] == '\n') ++i;
    } else {
      out.push_back(raw[i]);
    }
  }
  // Trim Unicode whitespace on both ends.
  const std::u32string wide = text::to_u32(out);
  std::size_t first = 0;
  std::size_t last = wide.size();
  while (first < last && is_space(wide[first])) ++first;
  while (last > first && is_space(wide[last - 1])) --last;
  return text::to_utf8(std::u32string_view(wide).substr(first, last - first));
}

Document segment_text(std::string_view raw, std::string_view lang, const SegmentationRules& rules,
                      std::optional<text::Script> script) {
  const std::u32string text = text::to_u32(normalize_source(raw));
  if (text.empty()) throw EmptyText("input has no non-whitespace character");

  std::unordered_set<std::u32string> abbreviations;
  for (const std::string& a : rules.abbreviations) abbreviations.insert(text::to_u32(a));
  std::vector<std::regex> markers;
  for (const std::string& m : rules.division_markers) markers.emplace_back(m);

  auto slice = [&](std::size_t b, std::size_t e) {
    return text::to_utf8(std::u32string_view(text).substr(b, e - b));
  };

  // Flat list of segments first; the whitespace after each one is the gap
  // to the next.
  struct Piece {
    bool head;
    int division;   // 0-based
    int paragraph;  // 0-based within the division
    Span span;
  };
  std::vector<Piece> pieces;
  int division = 0;
  int paragraphs_in_division = 0;
  bool division_used = false;

  for (const Block& block : split_blocks(text)) {
    std::size_t body = block.begin;
    const std::size_t line_end = std::min(block.end, text.find(U'\n', block.begin));
    const std::string first_line = slice(block.begin, line_end);
    const bool is_marker = std::any_of(markers.begin(), markers.end(), [&](const std::regex& r) {
      std::smatch m;
      return std::regex_search(first_line, m, r) && m.position(0) == 0;
    });
    if (is_marker) {
      if (division_used) {
        ++division;
        paragraphs_in_division = 0;
      }
      division_used = true;
      std::size_t head_end = line_end;
      while (head_end > block.begin && is_space(text[head_end - 1])) --head_end;
      pieces.push_back({true, division, 0, {block.begin, head_end}});
      body = line_end;
      while (body < block.end && is_space(text[body])) ++body;
      if (body >= block.end) continue;
    }
    division_used = true;
    const std::u32string para_text = text.substr(body, block.end - body);
    for (const Span& span : split_sentences(para_text, abbreviations))
      pieces.push_back({false, division, paragraphs_in_division, {body + span.begin, body + span.end}});
    ++paragraphs_in_division;
  }

  std::vector<Division> divisions(static_cast<std::size_t>(division) + 1);
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    const Piece& piece = pieces[k];
    const std::size_t gap_end = k + 1 < pieces.size() ? pieces[k + 1].span.begin : piece.span.end;
    std::string space = slice(piece.span.end, gap_end);
    Division& div = divisions[static_cast<std::size_t>(piece.division)];
    if (piece.head) {
      div.head = slice(piece.span.begin, piece.span.end);
      div.head_space_after = std::move(space);
      continue;
    }
    if (div.paragraphs.size() <= static_cast<std::size_t>(piece.paragraph)) div.paragraphs.emplace_back();
    auto& sentences = div.paragraphs.back().sentences;
    const SegmentId id{piece.division + 1, piece.paragraph + 1, static_cast<int>(sentences.size()) + 1};
    sentences.emplace_back(id, slice(piece.span.begin, piece.span.end), std::move(space));
  }
  return Document(std::string(lang), script.value_or(text::dominant_script(text)), std::move(divisions));
}

}  // namespace onomast::corpus
