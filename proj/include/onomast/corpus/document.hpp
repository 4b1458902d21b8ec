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

#ifndef ONOMAST_CORPUS_DOCUMENT_HPP_
#define ONOMAST_CORPUS_DOCUMENT_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "onomast/text/unicode.hpp"

namespace onomast::corpus {

// Position of a sentence: division, paragraph and sentence indices, all
// 1-based. Renders as "d1p1s1".
struct SegmentId {
  int d = 0;
  int p = 0;
  int s = 0;

  std::string str() const;
  // Same (d, p) coordinates: the structural anchor used by the aligner.
  bool same_paragraph(const SegmentId& other) const { return d == other.d && p == other.p; }

  friend auto operator<=>(const SegmentId&, const SegmentId&) = default;
};

// Parses "d{d}p{p}s{s}"; throws IdError.
SegmentId parse_segment_id(std::string_view text);

enum class TokenKind { word, number, punct };

// Offsets and lengths count Unicode scalar values.
struct Token {
  std::size_t offset = 0;
  std::size_t length = 0;
  TokenKind kind = TokenKind::word;

  std::size_t end() const { return offset + length; }
  friend bool operator==(const Token&, const Token&) = default;
};

// Maximal runs of letters (with internal hyphens/apostrophes) are words,
// digit runs are numbers, any other non-space character is punctuation.
std::vector<Token> tokenize(std::string_view text, std::string_view lang = {});

class Sentence {
 public:
  Sentence(SegmentId id, std::string text, std::string space_after = {});

  const SegmentId& id() const { return id_; }
  const std::string& text() const { return text_; }
  // Whitespace that follows the sentence in the source, up to the next
  // segment. Empty for the final sentence.
  const std::string& space_after() const { return space_after_; }
  const std::vector<Token>& tokens() const { return tokens_; }

  std::string_view token_text(std::size_t i) const;
  // Text covered by tokens [first, last).
  std::string_view span_text(std::size_t first, std::size_t last) const;
  // Scalar count of the sentence text.
  std::size_t length() const { return scalar_length_; }

  void set_id(SegmentId id) { id_ = id; }
  void set_space_after(std::string ws) { space_after_ = std::move(ws); }

  friend bool operator==(const Sentence& a, const Sentence& b) {
    return a.id_ == b.id_ && a.text_ == b.text_ && a.space_after_ == b.space_after_;
  }

 private:
  SegmentId id_;
  std::string text_;
  std::string space_after_;
  std::vector<Token> tokens_;
  // Byte offsets of token starts and ends, parallel to tokens_.
  std::vector<std::pair<std::size_t, std::size_t>> token_bytes_;
  std::size_t scalar_length_ = 0;
};

struct Paragraph {
  std::vector<Sentence> sentences;
  friend bool operator==(const Paragraph&, const Paragraph&) = default;
};

struct Division {
  // Chapter heading line matched by a division marker, if any.
  std::optional<std::string> head;
  std::string head_space_after;
  std::vector<Paragraph> paragraphs;
  friend bool operator==(const Division&, const Division&) = default;
};

class Document {
 public:
  Document() = default;
  Document(std::string lang, text::Script script, std::vector<Division> divisions);

  const std::string& lang() const { return lang_; }
  text::Script script() const { return script_; }
  const std::vector<Division>& divisions() const { return divisions_; }

  // Sentences in document order.
  const std::vector<const Sentence*>& sentences() const { return flat_; }
  std::size_t size() const { return flat_.size(); }
  bool empty() const { return flat_.empty(); }
  const Sentence& sentence(std::size_t i) const { return *flat_.at(i); }
  // Index into sentences(), if the id exists.
  std::optional<std::size_t> index_of(const SegmentId& id) const;

  // Reconstructs the normalized source text from heads, sentences and the
  // recorded inter-segment whitespace.
  std::string text() const;

  Document(const Document& other);
  Document& operator=(const Document& other);
  Document(Document&&) noexcept = default;
  Document& operator=(Document&&) noexcept = default;

  friend bool operator==(const Document& a, const Document& b) {
    return a.lang_ == b.lang_ && a.script_ == b.script_ && a.divisions_ == b.divisions_;
  }

 private:
  void reindex();

  std::string lang_;
  text::Script script_ = text::Script::latin;
  std::vector<Division> divisions_;
  std::vector<const Sentence*> flat_;
};

}  // namespace onomast::corpus

#endif  // ONOMAST_CORPUS_DOCUMENT_HPP_
