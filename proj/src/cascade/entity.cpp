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

#include "onomast/cascade/entity.hpp"

#include <algorithm>
#include <sstream>

#include "onomast/error.hpp"

namespace onomast::cascade {

const char* hypertype_name(Hypertype h) {
  switch (h) {
    case Hypertype::anthroponym: return "anthroponym";
    case Hypertype::toponym: return "toponym";
    case Hypertype::ergonym: return "ergonym";
    case Hypertype::pragmonym: return "pragmonym";
  }
  return "?";
}

Hypertype parse_hypertype(std::string_view name) {
  for (Hypertype h : kHypertypes)
    if (name == hypertype_name(h)) return h;
  throw ConfigError("unknown hypertype '" + std::string(name) + "'");
}

HypertypeMap HypertypeMap::defaults() {
  HypertypeMap m;
  m.set("pers", Hypertype::anthroponym);
  m.set("org", Hypertype::anthroponym);
  m.set("loc", Hypertype::toponym);
  m.set("prod", Hypertype::ergonym);
  m.set("time", Hypertype::pragmonym);
  m.set("event", Hypertype::pragmonym);
  return m;
}

HypertypeMap HypertypeMap::parse(std::string_view text) {
  HypertypeMap m;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw ParseError("expected prefix<TAB>hypertype", lineno);
    m.set(line.substr(0, tab), parse_hypertype(line.substr(tab + 1)));
  }
  return m;
}

std::optional<Hypertype> HypertypeMap::resolve(std::string_view raw) const {
  std::string_view key = raw;
  for (;;) {
    if (auto it = table_.find(key); it != table_.end()) return it->second;
    const auto dot = key.rfind('.');
    if (dot == std::string_view::npos) return std::nullopt;
    key = key.substr(0, dot);
  }
}

bool EntityType::matches(std::string_view pattern) const {
  if (raw.size() < pattern.size() || raw.compare(0, pattern.size(), pattern) != 0) return false;
  return raw.size() == pattern.size() || raw[pattern.size()] == '.';
}

std::vector<const EntityAnnotation*> AnnotatedDocument::in_sentence(const corpus::SegmentId& id) const {
  auto first = std::lower_bound(annotations.begin(), annotations.end(), id,
                                [](const EntityAnnotation& a, const corpus::SegmentId& key) { return a.segment < key; });
  std::vector<const EntityAnnotation*> out;
  for (auto it = first; it != annotations.end() && it->segment == id; ++it) out.push_back(&*it);
  return out;
}

}  // namespace onomast::cascade
