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

#include "onomast/pipeline/review.hpp"

#include <regex>

#include "json.hpp"
#include "onomast/aligner/align.hpp"
#include "onomast/error.hpp"
#include "onomast/pipeline/events.hpp"
#include "onomast/pipeline/workspace.hpp"
#include "onomast/transfer/namepair.hpp"

namespace onomast::pipeline {

namespace fs = std::filesystem;
using nlohmann::json;
using ordered = nlohmann::ordered_json;

namespace {

Response reply(int status, const ordered& body) { return {status, body.dump(2) + "\n"}; }

Response failure(int status, const std::string& kind, const std::string& message, const ordered& extra = {}) {
  ordered body = {{"error", kind}, {"message", message}};
  if (!extra.is_null()) body.update(extra);
  return reply(status, body);
}

ordered sentences(const corpus::Document& doc) {
  ordered out = ordered::array();
  for (const corpus::Sentence* s : doc.sentences()) out.push_back({{"id", s->id().str()}, {"text", s->text()}});
  return out;
}

ordered ids(const std::vector<corpus::SegmentId>& v) {
  ordered out = ordered::array();
  for (const auto& id : v) out.push_back(id.str());
  return out;
}

ordered pair_json(const transfer::NamePair& p) {
  ordered target = nullptr;
  if (p.target) target = {{"row", p.target->row}, {"begin", p.target->begin}, {"end", p.target->end},
                          {"surface", p.target->surface}};
  return {{"id", p.id()},
          {"segment", p.segment.str()},
          {"surface", p.surface},
          {"hypertype", cascade::hypertype_name(p.hypertype)},
          {"lang", p.target_lang},
          {"target", target},
          {"label", p.label ? ordered(transfer::label_name(*p.label)) : ordered(nullptr)},
          {"evidence", transfer::evidence_name(p.evidence)},
          {"score", p.score},
          {"note", p.note}};
}

// Body of a write request plus the revision check.
struct WriteRequest {
  json body;
  std::string actor;
};

WriteRequest parse_write(const std::string& text) {
  WriteRequest r;
  try {
    r.body = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("request body: ") + e.what(), 0);
  }
  if (!r.body.is_object() || !r.body.contains("revision") || !r.body["revision"].is_number_unsigned())
    throw ParseError("request body needs an unsigned 'revision'", 0);
  r.actor = r.body.value("actor", "reviewer");
  return r;
}

}  // namespace

ReviewService::ReviewService(ProjectConfig config, std::optional<fs::path> ui_dir)
    : config_(std::move(config)), ui_dir_(std::move(ui_dir)) {}

Response ReviewService::handle(const std::string& method, const std::string& path, const std::string& body) {
  static const std::regex kBitext(R"(/api/bitext/([^/]+))");
  static const std::regex kEdits(R"(/api/bitext/([^/]+)/edits)");
  static const std::regex kApprove(R"(/api/bitext/([^/]+)/approve)");
  static const std::regex kPairs(R"(/api/pairs/([^/]+))");
  static const std::regex kOverrides(R"(/api/pairs/([^/]+)/overrides)");
  std::smatch m;
  try {
    const bool get = method == "GET";
    const bool post = method == "POST";
    const auto known = [&](const std::string& label) {
      for (const TextConfig& t : config_.targets)
        if (t.label == label) return true;
      return false;
    };
    const auto route = [&](const std::regex& re) { return std::regex_match(path, m, re) && known(m[1].str()); };

    if (path == "/api/project") {
      if (!get) return failure(405, "MethodNotAllowed", method + " " + path);
      std::shared_lock lock(mutex_);
      return get_project();
    }
    if (route(kBitext)) {
      if (!get) return failure(405, "MethodNotAllowed", method + " " + path);
      std::shared_lock lock(mutex_);
      return get_bitext(m[1].str());
    }
    if (route(kPairs)) {
      if (!get) return failure(405, "MethodNotAllowed", method + " " + path);
      std::shared_lock lock(mutex_);
      return get_pairs(m[1].str());
    }
    if (route(kEdits) || route(kOverrides) || route(kApprove)) {
      if (!post) return failure(405, "MethodNotAllowed", method + " " + path);
      const std::string label = m[1].str();
      std::unique_lock lock(mutex_);
      if (std::regex_match(path, kEdits)) return post_edits(label, body);
      if (std::regex_match(path, kOverrides)) return post_override(label, body);
      return post_approve(label, body);
    }
    if (path.rfind("/api/", 0) == 0) return failure(404, "NotFound", path);
    if (get) return get_static(path);
    return failure(405, "MethodNotAllowed", method + " " + path);
  } catch (const ViolationError& e) {
    ordered violations = ordered::array();
    for (const std::string& v : e.violations()) violations.push_back(v);
    return failure(422, e.kind(), e.what(), {{"violations", violations}});
  } catch (const ParseError& e) {
    return failure(400, e.kind(), e.what());
  } catch (const QueryError& e) {
    return failure(404, e.kind(), e.what());
  } catch (const StageOrderError& e) {
    return failure(404, e.kind(), e.what());
  } catch (const EditConflict& e) {
    return failure(409, e.kind(), e.what());
  } catch (const StaleArtifact& e) {
    return failure(409, e.kind(), e.what());
  } catch (const Error& e) {
    return failure(500, e.kind(), e.what());
  } catch (const std::exception& e) {
    return failure(500, "InternalError", e.what());
  }
}

Response ReviewService::get_project() {
  const Workspace ws(config_.workspace);
  ordered bitexts = ordered::array();
  for (const TextConfig& t : config_.targets) {
    const BitextState state = read_state(ws, t.label);
    bitexts.push_back({{"label", t.label},
                       {"lang", t.lang},
                       {"aligned", ws.has(links_path(t.label))},
                       {"classified", ws.has(pairs_path(t.label))},
                       {"revision", state.revision},
                       {"approved", state.approved}});
  }
  return reply(200, {{"name", config_.name}, {"pivot", {{"lang", config_.pivot.lang}}}, {"bitexts", bitexts}});
}

Response ReviewService::get_bitext(const std::string& label) {
  const Workspace ws(config_.workspace);
  const aligner::Bitext bitext = load_bitext(ws, label, links_path(label));
  const BitextState state = read_state(ws, label);
  ordered links = ordered::array();
  for (const aligner::AlignmentLink& l : bitext.links)
    links.push_back({{"pivot", ids(l.pivot)},
                     {"target", ids(l.target)},
                     {"kind", l.kind()},
                     {"status", aligner::status_name(l.status)},
                     {"score", l.score}});
  return reply(200, {{"label", label},
                     {"revision", state.revision},
                     {"approved", state.approved},
                     {"pivot", sentences(bitext.pivot)},
                     {"target", sentences(bitext.target)},
                     {"links", links}});
}

namespace {

void check_revision(const BitextState& state, const json& body) {
  const auto revision = body.at("revision").get<std::uint64_t>();
  if (state.approved) throw EditConflict("bitext is approved");
  if (revision != state.revision)
    throw EditConflict("stale revision " + std::to_string(revision) + ", current is " +
                       std::to_string(state.revision));
}

}  // namespace

Response ReviewService::post_edits(const std::string& label, const std::string& text) {
  Workspace ws(config_.workspace);
  const WriteRequest req = parse_write(text);
  BitextState state = read_state(ws, label);
  check_revision(state, req.body);
  if (!req.body.contains("edits") || !req.body["edits"].is_array()) throw ParseError("request needs 'edits'", 0);
  std::vector<aligner::Edit> edits;
  for (const json& e : req.body["edits"]) edits.push_back(edit_from_json(e));
  const aligner::Bitext edited = aligner::apply_corrections(load_bitext(ws, label, links_path(label)), edits, config_.align);

  json canonical = json::array();
  for (const aligner::Edit& e : edits) canonical.push_back(edit_to_json(e));
  ws.rewrite(links_path(label), aligner::write_links(edited.links));
  state.revision += 1;
  append_event(ws, {label, state.revision, req.actor, utc_timestamp(), {{"kind", "links"}, {"edits", canonical}}});
  write_state(ws, label, state);
  return get_bitext(label);
}

Response ReviewService::get_pairs(const std::string& label) {
  const Workspace ws(config_.workspace);
  if (!ws.has(pairs_path(label))) throw StageOrderError("bitext " + label + " is not classified");
  const auto pairs = transfer::read_pairs(read_file(ws.path(pairs_path(label))));
  bool stale = false;
  try {
    ws.require(pairs_path(label), "classify");
  } catch (const StaleArtifact&) {
    stale = true;
  }
  ordered list = ordered::array();
  for (const auto& p : pairs) list.push_back(pair_json(p));
  return reply(200, {{"label", label}, {"revision", read_state(ws, label).revision}, {"stale", stale}, {"pairs", list}});
}

Response ReviewService::post_override(const std::string& label, const std::string& text) {
  Workspace ws(config_.workspace);
  const WriteRequest req = parse_write(text);
  BitextState state = read_state(ws, label);
  check_revision(state, req.body);
  if (!ws.has(pairs_path(label))) throw StageOrderError("bitext " + label + " is not classified");
  std::string pair, label_text, note;
  try {
    pair = req.body.at("pair").get<std::string>();
    label_text = req.body.at("label").get<std::string>();
    note = req.body.value("note", "");
  } catch (const json::exception& e) {
    throw ParseError(std::string("override: ") + e.what(), 0);
  }
  transfer::ProcedureLabel new_label;
  try {
    new_label = transfer::parse_label(label_text);
  } catch (const Error& e) {
    throw ParseError(e.what(), 0);
  }
  auto pairs = transfer::read_pairs(read_file(ws.path(pairs_path(label))));
  apply_override(pairs, pair, new_label, note);
  ws.rewrite(pairs_path(label), transfer::write_pairs(pairs));
  state.revision += 1;
  append_event(ws, {label, state.revision, req.actor, utc_timestamp(),
                    {{"kind", "override"}, {"pair", pair}, {"label", label_text}, {"note", note}}});
  write_state(ws, label, state);
  return get_pairs(label);
}

Response ReviewService::post_approve(const std::string& label, const std::string& text) {
  Workspace ws(config_.workspace);
  const WriteRequest req = parse_write(text);
  BitextState state = read_state(ws, label);
  check_revision(state, req.body);
  if (!ws.has(links_path(label))) throw StageOrderError("bitext " + label + " is not aligned");
  state.revision += 1;
  state.approved = true;
  append_event(ws, {label, state.revision, req.actor, utc_timestamp(), {{"kind", "approve"}}});
  write_state(ws, label, state);
  return reply(200, {{"label", label}, {"revision", state.revision}, {"approved", true}});
}

Response ReviewService::get_static(const std::string& path) {
  if (!ui_dir_) return failure(404, "NotFound", path);
  const std::string rel = path == "/" ? "index.html" : path.substr(1);
  if (rel.find("..") != std::string::npos) return failure(404, "NotFound", path);
  const fs::path file = *ui_dir_ / rel;
  if (!fs::is_regular_file(file)) return failure(404, "NotFound", path);
  const std::string ext = file.extension().string();
  std::string type = "application/octet-stream";
  if (ext == ".html") type = "text/html; charset=utf-8";
  else if (ext == ".js") type = "text/javascript";
  else if (ext == ".css") type = "text/css";
  else if (ext == ".json") type = "application/json";
  return {200, read_file(file), type};
}

}  // namespace onomast::pipeline
