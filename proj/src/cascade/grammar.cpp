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

#include "onomast/cascade/grammar.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "onomast/error.hpp"

namespace onomast::cascade {

WordSet parse_lexicon(std::string_view text) {
  WordSet words;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    words.insert(line);
  }
  return words;
}

Lexicons load_lexicons(const std::filesystem::path& directory) {
  if (!std::filesystem::is_directory(directory))
    throw ConfigError("lexicon directory not found: " + directory.string());
  Lexicons lexicons;
  for (const auto& entry : std::filesystem::directory_iterator(directory)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".lex") continue;
    std::ifstream in(entry.path(), std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    lexicons[entry.path().stem().string()] = parse_lexicon(buf.str());
  }
  return lexicons;
}

namespace {

class RuleParser {
 public:
  RuleParser(std::string_view source, int line) : src_(source), line_(line) {}

  LocalGrammar parse(const Lexicons& lexicons, const HypertypeMap& types) {
    LocalGrammar g;
    skip_space();
    g.priority = read_int("priority");
    for (;;) {
      skip_space();
      if (at_end()) fail("missing '=>'");
      if (src_.compare(pos_, 2, "=>") == 0) {
        pos_ += 2;
        break;
      }
      g.pattern.push_back(read_atom(lexicons));
    }
    if (g.pattern.empty()) fail("pattern needs at least one atom");
    skip_space();
    const std::size_t type_col = pos_;
    std::string type;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '.' || peek() == '_' ||
                         peek() == '-'))
      type.push_back(src_[pos_++]);
    if (type.empty()) fail("expected entity type");
    auto hypertype = types.resolve(type);
    if (!hypertype) fail_at(type_col, "entity type '" + type + "' has no hypertype mapping");
    g.emits = {type, *hypertype};
    expect('(');
    const std::size_t capture_col = pos_;
    const int first = read_int("capture start");
    expect('.');
    expect('.');
    const int last = read_int("capture end");
    expect(')');
    skip_space();
    if (!at_end() && peek() != '#') fail("trailing characters");
    const int n = static_cast<int>(g.pattern.size());
    if (first < 1 || last < first || last > n)
      fail_at(capture_col, "capture " + std::to_string(first) + ".." + std::to_string(last) +
                               " is not a non-empty range within 1.." + std::to_string(n));
    g.capture_first = static_cast<std::size_t>(first - 1);
    g.capture_last = static_cast<std::size_t>(last - 1);
    for (std::size_t i = g.capture_first; i <= g.capture_last; ++i)
      if (g.pattern[i].kind == Atom::Kind::entity)
        fail_at(capture_col, "capture may not cover an already-tagged entity atom");
    return g;
  }

 private:
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }
  void skip_space() {
    while (!at_end() && (peek() == ' ' || peek() == '\t')) ++pos_;
  }
  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& message) const {
    throw GrammarError(message, line_, static_cast<int>(at) + 1);
  }
  void expect(char c) {
    skip_space();
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  int read_int(const char* what) {
    skip_space();
    std::size_t start = pos_;
    if (!at_end() && peek() == '-') ++pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start || (pos_ == start + 1 && src_[start] == '-')) fail(std::string("expected ") + what);
    return std::stoi(std::string(src_.substr(start, pos_ - start)));
  }
  std::string read_name() {
    std::string name;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '-' ||
                         peek() == '.'))
      name.push_back(src_[pos_++]);
    return name;
  }

  Atom read_atom(const Lexicons& lexicons) {
    Atom atom;
    const std::size_t col = pos_;
    const char c = peek();
    if (c == '"') {
      ++pos_;
      atom.kind = Atom::Kind::literal;
      for (;;) {
        if (at_end()) fail_at(col, "unterminated literal");
        char ch = src_[pos_++];
        if (ch == '"') break;
        if (ch == '\\' && !at_end()) ch = src_[pos_++];
        atom.value.push_back(ch);
      }
      if (atom.value.empty()) fail_at(col, "empty literal");
      if (!at_end() && peek() == 'i') {
        atom.case_sensitive = false;
        ++pos_;
      }
    } else if (c == '@') {
      ++pos_;
      const std::string cls = read_name();
      if (cls == "Cap") {
        atom.kind = Atom::Kind::capitalized;
      } else if (cls == "Word") {
        atom.kind = Atom::Kind::word;
      } else if (cls == "Num") {
        atom.kind = Atom::Kind::number;
      } else {
        fail_at(col, "unknown character class '@" + cls + "'");
      }
    } else if (c == '%') {
      ++pos_;
      atom.kind = Atom::Kind::lexicon;
      atom.value = read_name();
      if (atom.value.empty()) fail_at(col, "expected lexicon name");
      if (lexicons.find(atom.value) == lexicons.end())
        throw LexiconError("lexicon '" + atom.value + "' is not provided (line " + std::to_string(line_) +
                           ", column " + std::to_string(col + 1) + ")");
    } else if (c == '<') {
      ++pos_;
      atom.kind = Atom::Kind::entity;
      atom.value = read_name();
      if (atom.value.empty() || at_end() || peek() != '>') fail_at(col, "malformed entity atom");
      ++pos_;
    } else {
      fail("unexpected character");
    }
    if (!at_end() && (peek() == '+' || peek() == '?')) {
      atom.repeat = peek() == '+' ? Atom::Repeat::one_or_more : Atom::Repeat::optional;
      ++pos_;
    }
    if (!at_end() && peek() != ' ' && peek() != '\t') fail("expected whitespace after atom");
    return atom;
  }

  std::string_view src_;
  int line_;
  std::size_t pos_ = 0;
};

}  // namespace

LocalGrammar compile_grammar(std::string_view source, const Lexicons& lexicons, const HypertypeMap& types,
                             int line) {
  LocalGrammar g = RuleParser(source, line).parse(lexicons, types);
  g.name = "rule:" + std::to_string(line);
  return g;
}

std::vector<LocalGrammar> compile_grammar_file(std::string_view text, const Lexicons& lexicons,
                                               const HypertypeMap& types, std::string_view label) {
  std::vector<LocalGrammar> grammars;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    LocalGrammar g = compile_grammar(line, lexicons, types, lineno);
    g.name = std::string(label) + ":" + std::to_string(lineno);
    grammars.push_back(std::move(g));
  }
  return grammars;
}

}  // namespace onomast::cascade
