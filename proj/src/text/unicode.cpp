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

#include "onomast/text/unicode.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/uscript.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <array>

#include "onomast/error.hpp"

namespace onomast::text {

std::u32string to_u32(std::string_view utf8) {
  std::u32string out;
  out.reserve(utf8.size());
  const auto* bytes = reinterpret_cast<const uint8_t*>(utf8.data());
  const auto length = static_cast<int32_t>(utf8.size());
  int32_t i = 0;
  while (i < length) {
    const int32_t at = i;
    UChar32 c;
    U8_NEXT(bytes, i, length, c);
    if (c < 0) throw EncodingError("ill-formed UTF-8 at byte " + std::to_string(at));
    out.push_back(static_cast<char32_t>(c));
  }
  return out;
}

std::string to_utf8(char32_t c) {
  std::array<uint8_t, 4> buf{};
  int32_t n = 0;
  UBool error = false;
  U8_APPEND(buf.data(), n, 4, static_cast<UChar32>(c), error);
  if (error) throw EncodingError("invalid scalar value");
  return std::string(reinterpret_cast<const char*>(buf.data()), static_cast<std::size_t>(n));
}

std::string to_utf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t c : text) out += to_utf8(c);
  return out;
}

std::size_t scalar_length(std::string_view utf8) {
  std::size_t n = 0;
  for (char ch : utf8)
    if ((static_cast<unsigned char>(ch) & 0xC0) != 0x80) ++n;
  return n;
}

bool is_letter(char32_t c) { return u_isUAlphabetic(static_cast<UChar32>(c)) && !is_digit(c); }
bool is_upper(char32_t c) {
  auto type = u_charType(static_cast<UChar32>(c));
  return type == U_UPPERCASE_LETTER || type == U_TITLECASE_LETTER;
}
bool is_digit(char32_t c) { return u_isdigit(static_cast<UChar32>(c)); }
bool is_space(char32_t c) { return u_isUWhiteSpace(static_cast<UChar32>(c)); }
bool is_mark(char32_t c) {
  auto type = u_charType(static_cast<UChar32>(c));
  return type == U_NON_SPACING_MARK || type == U_COMBINING_SPACING_MARK || type == U_ENCLOSING_MARK;
}

Script script_of(char32_t c) {
  UErrorCode status = U_ZERO_ERROR;
  switch (uscript_getScript(static_cast<UChar32>(c), &status)) {
    case USCRIPT_LATIN: return Script::latin;
    case USCRIPT_CYRILLIC: return Script::cyrillic;
    case USCRIPT_GREEK: return Script::greek;
    default: return Script::other;
  }
}

Script dominant_script(std::u32string_view text) {
  std::array<std::size_t, 4> counts{};
  for (char32_t c : text)
    if (is_letter(c)) ++counts[static_cast<std::size_t>(script_of(c))];
  std::size_t best = 3;
  for (std::size_t i = 0; i < 3; ++i)
    if (counts[i] > 0 && (best == 3 || counts[i] > counts[best])) best = i;
  return static_cast<Script>(best);
}

const char* script_name(Script s) {
  switch (s) {
    case Script::latin: return "latin";
    case Script::cyrillic: return "cyrillic";
    case Script::greek: return "greek";
    case Script::other: break;
  }
  return "other";
}

Script parse_script(std::string_view name) {
  if (name == "latin") return Script::latin;
  if (name == "cyrillic") return Script::cyrillic;
  if (name == "greek") return Script::greek;
  throw ConfigError("unknown script '" + std::string(name) + "'");
}

std::u32string to_lower(std::u32string_view text) {
  std::u32string out;
  out.reserve(text.size());
  for (char32_t c : text) out.push_back(static_cast<char32_t>(u_tolower(static_cast<UChar32>(c))));
  return out;
}

std::string to_lower(std::string_view utf8) { return to_utf8(to_lower(to_u32(utf8))); }

std::u32string fold(std::u32string_view text) {
  icu::UnicodeString s;
  for (char32_t c : text) s.append(static_cast<UChar32>(c));
  s.foldCase();
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfd = icu::Normalizer2::getNFDInstance(status);
  if (U_FAILURE(status)) throw EncodingError("NFD normalizer unavailable");
  icu::UnicodeString decomposed = nfd->normalize(s, status);
  if (U_FAILURE(status)) throw EncodingError("NFD normalization failed");
  std::u32string out;
  out.reserve(static_cast<std::size_t>(decomposed.length()));
  for (int32_t i = 0; i < decomposed.length(); i = decomposed.moveIndex32(i, 1)) {
    const char32_t c = static_cast<char32_t>(decomposed.char32At(i));
    if (!is_mark(c)) out.push_back(c);
  }
  return out;
}

std::string fold(std::string_view utf8) { return to_utf8(fold(to_u32(utf8))); }

std::string_view scalar_substr(std::string_view utf8, std::size_t first, std::size_t count) {
  std::size_t scalar = 0;
  std::size_t begin = utf8.size();
  std::size_t end = utf8.size();
  for (std::size_t i = 0; i <= utf8.size(); ++i) {
    const bool boundary = i == utf8.size() || (static_cast<unsigned char>(utf8[i]) & 0xC0) != 0x80;
    if (!boundary) continue;
    if (scalar == first) begin = i;
    if (scalar == first + count) {
      end = i;
      break;
    }
    ++scalar;
  }
  if (begin > end) begin = end;
  return utf8.substr(begin, end - begin);
}

}  // namespace onomast::text
