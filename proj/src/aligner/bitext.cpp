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

#include "onomast/aligner/bitext.hpp"

#include <charconv>
#include <sstream>

#include "onomast/error.hpp"

namespace onomast::aligner {

const char* status_name(LinkStatus s) {
  switch (s) {
    case LinkStatus::automatic: return "auto";
    case LinkStatus::confirmed: return "confirmed";
    case LinkStatus::edited: return "edited";
  }
  return "?";
}

LinkStatus parse_status(std::string_view name) {
  if (name == "auto") return LinkStatus::automatic;
  if (name == "confirmed") return LinkStatus::confirmed;
  if (name == "edited") return LinkStatus::edited;
  throw ParseError("unknown link status '" + std::string(name) + "'", 0);
}

std::string AlignmentLink::kind() const { return std::to_string(pivot.size()) + ":" + std::to_string(target.size()); }

bool legal_shape(std::size_t pivot, std::size_t target) {
  return (pivot == 1 && target <= 2) || (pivot == 2 && target == 1) || (pivot == 0 && target == 1);
}

std::pair<std::size_t, std::size_t> parse_shape(std::string_view kind) {
  if (kind.size() == 3 && kind[1] == ':' && kind[0] >= '0' && kind[0] <= '9' && kind[2] >= '0' && kind[2] <= '9') {
    const std::size_t p = static_cast<std::size_t>(kind[0] - '0');
    const std::size_t t = static_cast<std::size_t>(kind[2] - '0');
    if (legal_shape(p, t)) return {p, t};
  }
  throw LinkShapeError("illegal link kind '" + std::string(kind) + "'");
}

double Bitext::total_cost() const {
  double total = 0.0;
  for (const AlignmentLink& l : links) total += l.score;
  return total;
}

const char* violation_name(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::gap: return "Gap";
    case Violation::Kind::overlap: return "Overlap";
    case Violation::Kind::non_monotone: return "NonMonotone";
    case Violation::Kind::illegal_kind: return "IllegalKind";
    case Violation::Kind::unknown_segment: return "UnknownSegment";
  }
  return "?";
}

std::string Violation::describe() const {
  std::string out = violation_name(kind);
  if (!side.empty()) out += " " + side;
  if (segment) out += " " + segment->str();
  out += " (link " + std::to_string(link) + ")";
  return out;
}

namespace {

void check_side(const std::vector<AlignmentLink>& links, const corpus::Document& doc, bool pivot_side,
                std::vector<Violation>& out) {
  const char* side = pivot_side ? "pivot" : "target";
  std::vector<std::size_t> owners(doc.size(), 0);
  std::vector<std::size_t> owner_link(doc.size(), 0);
  std::optional<std::size_t> max_seen;
  for (std::size_t li = 0; li < links.size(); ++li) {
    const auto& ids = pivot_side ? links[li].pivot : links[li].target;
    std::optional<std::size_t> previous;
    bool reported_order = false;
    for (const SegmentId& id : ids) {
      auto index = doc.index_of(id);
      if (!index) {
        out.push_back({Violation::Kind::unknown_segment, side, id, li});
        continue;
      }
      if (owners[*index]++ > 0) {
        out.push_back({Violation::Kind::overlap, side, id, li});
      } else if (!reported_order && ((previous && *index != *previous + 1) ||
                                     (!previous && max_seen && *index < *max_seen))) {
        out.push_back({Violation::Kind::non_monotone, side, id, li});
        reported_order = true;
      }
      owner_link[*index] = li;
      previous = index;
      if (!max_seen || *index > *max_seen) max_seen = index;
    }
  }
  for (std::size_t i = 0; i < owners.size(); ++i) {
    if (owners[i] == 0) {
      // Attribute a gap to the first link after it, for display.
      std::size_t li = links.size();
      for (std::size_t j = i + 1; j < owners.size(); ++j)
        if (owners[j] > 0) {
          li = owner_link[j];
          break;
        }
      out.push_back({Violation::Kind::gap, side, doc.sentence(i).id(), li});
    }
  }
}

}  // namespace

std::vector<Violation> validate_links(const Bitext& bitext) {
  std::vector<Violation> out;
  for (std::size_t li = 0; li < bitext.links.size(); ++li) {
    const auto& l = bitext.links[li];
    if (!legal_shape(l.pivot.size(), l.target.size())) out.push_back({Violation::Kind::illegal_kind, "", std::nullopt, li});
  }
  check_side(bitext.links, bitext.pivot, true, out);
  check_side(bitext.links, bitext.target, false, out);
  return out;
}

std::string format_score(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

namespace {

std::string join_ids(const std::vector<SegmentId>& ids) {
  if (ids.empty()) return "-";
  std::string out;
  for (const SegmentId& id : ids) {
    if (!out.empty()) out += ',';
    out += id.str();
  }
  return out;
}

std::vector<SegmentId> split_ids(std::string_view field) {
  std::vector<SegmentId> ids;
  if (field == "-") return ids;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = field.find(',', start);
    ids.push_back(corpus::parse_segment_id(field.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return ids;
}

}  // namespace

std::string write_links(const std::vector<AlignmentLink>& links) {
  std::string out;
  for (const AlignmentLink& l : links) {
    out += join_ids(l.pivot) + '\t' + join_ids(l.target) + '\t' + l.kind() + '\t' + status_name(l.status) + '\t' +
           format_score(l.score) + '\n';
  }
  return out;
}

std::vector<AlignmentLink> read_links(std::string_view text) {
  std::vector<AlignmentLink> links;
  std::size_t start = 0;
  int lineno = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string_view> fields;
    std::size_t f = 0;
    for (;;) {
      const std::size_t tab = line.find('\t', f);
      fields.push_back(line.substr(f, tab - f));
      if (tab == std::string_view::npos) break;
      f = tab + 1;
    }
    if (fields.size() != 5) throw ParseError("expected 5 tab-separated fields", lineno);
    AlignmentLink link;
    try {
      link.pivot = split_ids(fields[0]);
      link.target = split_ids(fields[1]);
    } catch (const IdError& e) {
      throw ParseError(e.what(), lineno);
    }
    if (link.kind() != fields[2]) throw ParseError("kind column disagrees with ids", lineno);
    link.status = parse_status(fields[3]);
    const std::string score(fields[4]);
    auto [ptr, ec] = std::from_chars(score.data(), score.data() + score.size(), link.score);
    if (ec != std::errc() || ptr != score.data() + score.size()) throw ParseError("bad score", lineno);
    links.push_back(std::move(link));
  }
  return links;
}

}  // namespace onomast::aligner
