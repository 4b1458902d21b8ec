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

#ifndef ONOMAST_TEXT_UNICODE_HPP_
#define ONOMAST_TEXT_UNICODE_HPP_

#include <string>
#include <string_view>

namespace onomast::text {

enum class Script { latin, cyrillic, greek, other };

// Strict UTF-8 decoding; throws EncodingError on ill-formed input.
std::u32string to_u32(std::string_view utf8);
std::string to_utf8(std::u32string_view text);
std::string to_utf8(char32_t c);

// Number of Unicode scalar values in a UTF-8 string.
std::size_t scalar_length(std::string_view utf8);

bool is_letter(char32_t c);
bool is_upper(char32_t c);
bool is_digit(char32_t c);
bool is_space(char32_t c);
bool is_mark(char32_t c);

Script script_of(char32_t c);
// Script of the majority of letters; `other` when there are none.
Script dominant_script(std::u32string_view text);
const char* script_name(Script s);
Script parse_script(std::string_view name);

std::u32string to_lower(std::u32string_view text);
std::string to_lower(std::string_view utf8);

// Case-folded, canonically decomposed, combining marks removed.
// "Éléonore" -> "eleonore".
std::u32string fold(std::u32string_view text);
std::string fold(std::string_view utf8);

// Byte range of [first, first + count) scalar values inside a UTF-8 string.
std::string_view scalar_substr(std::string_view utf8, std::size_t first, std::size_t count);

}  // namespace onomast::text

#endif  // ONOMAST_TEXT_UNICODE_HPP_
