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

#include "onomast/pipeline/events.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <chrono>
#include <ctime>
#include <filesystem>

#include "onomast/corpus/tei.hpp"
#include "onomast/error.hpp"

namespace onomast::pipeline {

namespace fs = std::filesystem;
using nlohmann::json;

std::string events_path(const std::string& label) { return "events/" + label + ".jsonl"; }
std::string links_path(const std::string& label, bool automatic) {
  return "links/" + label + (automatic ? ".auto.tsv" : ".tsv");
}
std::string pairs_path(const std::string& label, bool automatic) {
  return "pairs/" + label + (automatic ? ".auto.tsv" : ".tsv");
}
std::string tei_path(const std::string& label) { return "tei/" + label + ".xml"; }

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::vector<EditEvent> read_events(const Workspace& ws, const std::string& label) {
  const fs::path p = ws.path(events_path(label));
  std::vector<EditEvent> out;
  if (!fs::exists(p)) return out;
  const std::string text = read_file(p);
  std::size_t start = 0;
  int line = 0;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    // A line without its newline was cut short by a crash; ignore it.
    if (end == std::string::npos) break;
    ++line;
    const std::string_view l(text.data() + start, end - start);
    start = end + 1;
    if (l.empty()) continue;
    try {
      json j = json::parse(l);
      out.push_back({j.at("bitext").get<std::string>(), j.at("revision").get<std::uint64_t>(),
                     j.at("actor").get<std::string>(), j.at("timestamp").get<std::string>(), j.at("payload")});
    } catch (const json::exception& e) {
      throw ParseError(events_path(label) + ": " + e.what(), line);
    }
  }
  return out;
}

void append_event(const Workspace& ws, const EditEvent& e) {
  const fs::path p = ws.path(events_path(e.bitext));
  fs::create_directories(p.parent_path());
  json j = {{"bitext", e.bitext}, {"revision", e.revision}, {"actor", e.actor}, {"timestamp", e.timestamp},
            {"payload", e.payload}};
  const std::string line = j.dump() + "\n";
  const int fd = ::open(p.c_str(), O_WRONLY | O_CREAT | O_APPEND, 0644);
  if (fd < 0) throw Error("IoError", "cannot open " + p.string());
  const bool ok = ::write(fd, line.data(), line.size()) == static_cast<ssize_t>(line.size()) && ::fsync(fd) == 0;
  ::close(fd);
  if (!ok) throw Error("IoError", "cannot append to " + p.string());
}

BitextState read_state(const Workspace& ws, const std::string& label) {
  const fs::path p = ws.path("state/" + label + ".json");
  BitextState s;
  if (!fs::exists(p)) return s;
  try {
    json j = json::parse(read_file(p));
    s.revision = j.at("revision").get<std::uint64_t>();
    s.approved = j.at("approved").get<bool>();
  } catch (const json::exception& e) {
    throw ParseError("state/" + label + ".json: " + e.what(), 0);
  }
  return s;
}

void write_state(const Workspace& ws, const std::string& label, const BitextState& s) {
  nlohmann::ordered_json j = {{"revision", s.revision}, {"approved", s.approved}};
  ws.write_plain("state/" + label + ".json", j.dump(2) + "\n");
}

aligner::Edit edit_from_json(const json& j) {
  try {
    const std::string op = j.at("op").get<std::string>();
    if (op == "merge") return aligner::edit::Merge{j.at("index").get<std::size_t>()};
    if (op == "confirm") return aligner::edit::Confirm{j.at("index").get<std::size_t>()};
    if (op == "split")
      return aligner::edit::Split{j.at("index").get<std::size_t>(), j.at("pivot_cut").get<std::size_t>(),
                                  j.at("target_cut").get<std::size_t>()};
    if (op == "retype") {
      aligner::edit::Retype r{j.at("first").get<std::size_t>(), j.at("count").get<std::size_t>(), {}};
      for (const auto& s : j.at("shapes")) {
        const std::string kind = s.get<std::string>();
        const std::size_t colon = kind.find(':');
        if (colon == std::string::npos || colon == 0 || colon + 1 == kind.size())
          throw ParseError("bad shape '" + kind + "'", 0);
        r.shapes.emplace_back(std::stoul(kind.substr(0, colon)), std::stoul(kind.substr(colon + 1)));
      }
      return r;
    }
    throw ParseError("unknown edit op '" + op + "'", 0);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad edit: ") + e.what(), 0);
  } catch (const std::logic_error& e) {
    throw ParseError(std::string("bad edit: ") + e.what(), 0);
  }
}

json edit_to_json(const aligner::Edit& e) {
  struct V {
    json operator()(const aligner::edit::Merge& m) const { return {{"op", "merge"}, {"index", m.index}}; }
    json operator()(const aligner::edit::Confirm& c) const { return {{"op", "confirm"}, {"index", c.index}}; }
    json operator()(const aligner::edit::Split& s) const {
      return {{"op", "split"}, {"index", s.index}, {"pivot_cut", s.pivot_cut}, {"target_cut", s.target_cut}};
    }
    json operator()(const aligner::edit::Retype& r) const {
      json shapes = json::array();
      for (const auto& [p, t] : r.shapes) shapes.push_back(std::to_string(p) + ":" + std::to_string(t));
      return {{"op", "retype"}, {"first", r.first}, {"count", r.count}, {"shapes", shapes}};
    }
  };
  return std::visit(V{}, e);
}

void apply_override(std::vector<transfer::NamePair>& pairs, const std::string& id, transfer::ProcedureLabel label,
                    const std::string& note) {
  if (label == transfer::ProcedureLabel::Other && note.empty()) throw InvalidEdit("an Other label needs a note");
  for (transfer::NamePair& p : pairs) {
    if (p.id() != id) continue;
    p.label = label;
    p.note = note;
    if (label == transfer::ProcedureLabel::Absence) p.target.reset();
    return;
  }
  throw QueryError("no name pair '" + id + "'");
}

std::vector<EditEvent> current_events(const std::vector<EditEvent>& all) {
  std::size_t from = 0;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i].payload.value("kind", "") == "reset") from = i + 1;
  return {all.begin() + static_cast<long>(from), all.end()};
}

aligner::Bitext load_bitext(const Workspace& ws, const std::string& label, const std::string& links_rel) {
  aligner::Bitext b;
  b.pivot = corpus::parse_tei(ws.require(tei_path("pivot"), "segment")).document;
  b.target = corpus::parse_tei(ws.require(tei_path(label), "segment")).document;
  b.links = aligner::read_links(ws.require(links_rel, "align"));
  return b;
}

ReplayResult replay(const ProjectConfig& config, const Workspace& ws, const std::string& label) {
  aligner::Bitext bitext = load_bitext(ws, label, links_path(label, true));
  std::optional<std::vector<transfer::NamePair>> pairs;
  if (ws.has(pairs_path(label, true))) pairs = transfer::read_pairs(read_file(ws.path(pairs_path(label, true))));
  for (const EditEvent& e : current_events(read_events(ws, label))) {
    const std::string kind = e.payload.value("kind", "");
    if (kind == "links") {
      std::vector<aligner::Edit> edits;
      for (const auto& j : e.payload.at("edits")) edits.push_back(edit_from_json(j));
      bitext = aligner::apply_corrections(bitext, edits, config.align);
    } else if (kind == "override" && pairs) {
      try {
        apply_override(*pairs, e.payload.at("pair").get<std::string>(),
                       transfer::parse_label(e.payload.at("label").get<std::string>()),
                       e.payload.value("note", ""));
      } catch (const QueryError&) {
        // The pair vanished after re-classification.
      }
    }
  }
  return {std::move(bitext.links), std::move(pairs)};
}

}  // namespace onomast::pipeline
