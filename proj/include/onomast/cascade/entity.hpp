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

#ifndef ONOMAST_CASCADE_ENTITY_HPP_
#define ONOMAST_CASCADE_ENTITY_HPP_

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "onomast/corpus/document.hpp"

namespace onomast::cascade {

enum class Hypertype { anthroponym, toponym, ergonym, pragmonym };

inline constexpr std::array<Hypertype, 4> kHypertypes = {Hypertype::anthroponym, Hypertype::toponym,
                                                         Hypertype::ergonym, Hypertype::pragmonym};

const char* hypertype_name(Hypertype h);
// Throws ConfigError for unknown names.
Hypertype parse_hypertype(std::string_view name);

// Maps dotted entity types to hypertypes through their longest listed
// prefix: "loc.line" falls back to "loc".
class HypertypeMap {
 public:
  // pers, org -> anthroponym; loc -> toponym; prod -> ergonym;
  // time, event -> pragmonym.
  static HypertypeMap defaults();
  // Lines "prefix<TAB>hypertype"; '#' comments.
  static HypertypeMap parse(std::string_view text);

  void set(std::string prefix, Hypertype h) { table_[std::move(prefix)] = h; }
  std::optional<Hypertype> resolve(std::string_view raw) const;

 private:
  std::map<std::string, Hypertype, std::less<>> table_;
};

struct EntityType {
  std::string raw;
  Hypertype hypertype = Hypertype::anthroponym;

  // True when `raw` equals `pattern` or extends it by dotted components.
  bool matches(std::string_view pattern) const;
  friend bool operator==(const EntityType&, const EntityType&) = default;
};

// A tagged span of word/punct tokens [begin, end) inside one sentence.
struct EntityAnnotation {
  corpus::SegmentId segment;
  std::size_t begin = 0;
  std::size_t end = 0;
  EntityType type;
  std::string surface;

  friend bool operator==(const EntityAnnotation&, const EntityAnnotation&) = default;
};

// Annotations sorted by (segment, begin); never overlapping within a
// sentence.
struct AnnotatedDocument {
  corpus::Document document;
  std::vector<EntityAnnotation> annotations;

  // Annotations of one sentence, in token order.
  std::vector<const EntityAnnotation*> in_sentence(const corpus::SegmentId& id) const;
};

}  // namespace onomast::cascade

#endif  // ONOMAST_CASCADE_ENTITY_HPP_
