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

#include "onomast/corpus/document.hpp"

#include <algorithm>
#include <charconv>

#include "onomast/error.hpp"

namespace onomast::corpus {

std::string SegmentId::str() const {
  return "d" + std::to_string(d) + "p" + std::to_string(p) + "s" + std::to_string(s);
}

namespace {

// Reads "<letter><positive int>" at `pos`; returns the integer.
int read_component(std::string_view text, std::size_t& pos, char letter) {
  if (pos >= text.size() || text[pos] != letter)
    throw IdError("malformed segment id '" + std::string(text) + "'");
  ++pos;
  const char* first = text.data() + pos;
  const char* last = text.data() + text.size();
  int value = 0;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr == first || value < 1 || *first == '0')
    throw IdError("malformed segment id '" + std::string(text) + "'");
  pos += static_cast<std::size_t>(ptr - first);
  return value;
}

}  // namespace

SegmentId parse_segment_id(std::string_view text) {
  std::size_t pos = 0;
  SegmentId id;
  id.d = read_component(text, pos, 'd');
  id.p = read_component(text, pos, 'p');
  id.s = read_component(text, pos, 's');
  if (pos != text.size()) throw IdError("malformed segment id '" + std::string(text) + "'");
  return id;
}

std::vector<Token> tokenize(std::string_view utf8, std::string_view /*lang*/) {
  const std::u32string text = text::to_u32(utf8);
  std::vector<Token> tokens;
  const std::size_t n = text.size();
  auto is_word_char = [&](std::size_t i) { return text::is_letter(text[i]) || text::is_mark(text[i]); };
  auto is_joiner = [](char32_t c) { return c == U'-' || c == U'\'' || c == U'’' || c == U'‐'; };
  std::size_t i = 0;
  while (i < n) {
    const char32_t c = text[i];
    if (text::is_space(c)) {
      ++i;
    } else if (is_word_char(i)) {
      std::size_t j = i + 1;
      while (j < n) {
        if (is_word_char(j)) {
          ++j;
        } else if (is_joiner(text[j]) && j + 1 < n && is_word_char(j + 1)) {
          j += 2;
        } else {
          break;
        }
      }
      tokens.push_back({i, j - i, TokenKind::word});
      i = j;
    } else if (text::is_digit(c)) {
      std::size_t j = i + 1;
      while (j < n && text::is_digit(text[j])) ++j;
      tokens.push_back({i, j - i, TokenKind::number});
      i = j;
    } else {
      tokens.push_back({i, 1, TokenKind::punct});
      ++i;
    }
  }
  return tokens;
}

Sentence::Sentence(SegmentId id, std::string text, std::string space_after)
    : id_(id), text_(std::move(text)), space_after_(std::move(space_after)), tokens_(tokenize(text_)) {
  // Map scalar offsets to byte offsets once.
  std::vector<std::size_t> byte_at;
  byte_at.reserve(text_.size() + 1);
  for (std::size_t b = 0; b < text_.size(); ++b)
    if ((static_cast<unsigned char>(text_[b]) & 0xC0) != 0x80) byte_at.push_back(b);
  scalar_length_ = byte_at.size();
  byte_at.push_back(text_.size());
  token_bytes_.reserve(tokens_.size());
  for (const Token& t : tokens_) token_bytes_.emplace_back(byte_at[t.offset], byte_at[t.end()]);
}

std::string_view Sentence::token_text(std::size_t i) const {
  const auto [b, e] = token_bytes_.at(i);
  return std::string_view(text_).substr(b, e - b);
}

std::string_view Sentence::span_text(std::size_t first, std::size_t last) const {
  if (first >= last || last > tokens_.size()) return {};
  const std::size_t b = token_bytes_[first].first;
  const std::size_t e = token_bytes_[last - 1].second;
  return std::string_view(text_).substr(b, e - b);
}

Document::Document(std::string lang, text::Script script, std::vector<Division> divisions)
    : lang_(std::move(lang)), script_(script), divisions_(std::move(divisions)) {
  reindex();
}

Document::Document(const Document& other)
    : lang_(other.lang_), script_(other.script_), divisions_(other.divisions_) {
  reindex();
}

Document& Document::operator=(const Document& other) {
  if (this != &other) {
    lang_ = other.lang_;
    script_ = other.script_;
    divisions_ = other.divisions_;
    reindex();
  }
  return *this;
}

void Document::reindex() {
  flat_.clear();
  for (const Division& d : divisions_)
    for (const Paragraph& p : d.paragraphs)
      for (const Sentence& s : p.sentences) flat_.push_back(&s);
}

std::optional<std::size_t> Document::index_of(const SegmentId& id) const {
  auto it = std::lower_bound(flat_.begin(), flat_.end(), id,
                             [](const Sentence* s, const SegmentId& key) { return s->id() < key; });
  if (it == flat_.end() || (*it)->id() != id) return std::nullopt;
  return static_cast<std::size_t>(it - flat_.begin());
}

std::string Document::text() const {
  std::string out;
  for (const Division& d : divisions_) {
    if (d.head) out += *d.head + d.head_space_after;
    for (const Paragraph& p : d.paragraphs)
      for (const Sentence& s : p.sentences) out += s.text() + s.space_after();
  }
  return out;
}

}  // namespace onomast::corpus
