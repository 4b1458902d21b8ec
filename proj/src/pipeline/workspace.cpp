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

#include "onomast/pipeline/workspace.hpp"

#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "onomast/error.hpp"
#include "onomast/util/hash.hpp"

namespace onomast::pipeline {

namespace fs = std::filesystem;

namespace {

constexpr const char* kManifest = "manifest.json";

}  // namespace

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("IoError", "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_atomic(const fs::path& path, std::string_view bytes) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  const fs::path tmp = path.string() + ".tmp." + std::to_string(::getpid());
  {
    std::FILE* f = std::fopen(tmp.c_str(), "wb");
    if (!f) throw Error("IoError", "cannot write " + tmp.string());
    const bool ok = std::fwrite(bytes.data(), 1, bytes.size(), f) == bytes.size() && std::fflush(f) == 0 &&
                    ::fsync(::fileno(f)) == 0;
    std::fclose(f);
    if (!ok) {
      fs::remove(tmp);
      throw Error("IoError", "short write to " + tmp.string());
    }
  }
  fs::rename(tmp, path);
}

Workspace::Workspace(fs::path root) : root_(fs::absolute(std::move(root)).lexically_normal()) {
  const fs::path manifest = root_ / kManifest;
  if (!fs::exists(manifest)) return;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(manifest));
    for (const auto& [rel, e] : j.at("artifacts").items()) {
      Entry entry;
      entry.sha256 = e.at("sha256").get<std::string>();
      entry.stage = e.at("stage").get<std::string>();
      entry.inputs = e.at("inputs").get<std::map<std::string, std::string>>();
      entries_[rel] = std::move(entry);
    }
  } catch (const nlohmann::json::exception& e) {
    throw StaleArtifact("manifest.json is unreadable: " + std::string(e.what()));
  }
}

void Workspace::save() const {
  nlohmann::ordered_json artifacts = nlohmann::ordered_json::object();
  for (const auto& [rel, e] : entries_) {
    nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
    for (const auto& [k, v] : e.inputs) inputs[k] = v;
    artifacts[rel] = {{"sha256", e.sha256}, {"stage", e.stage}, {"inputs", inputs}};
  }
  nlohmann::ordered_json j = {{"artifacts", artifacts}};
  write_atomic(root_ / kManifest, j.dump(2) + "\n");
}

std::string Workspace::require(std::string_view rel, std::string_view needed_stage) const {
  auto it = entries_.find(std::string(rel));
  if (it == entries_.end() || !fs::exists(path(rel)))
    throw StageOrderError(std::string(rel) + " is missing; run '" + std::string(needed_stage) + "' first");
  std::string bytes = read_file(path(rel));
  if (util::sha256_hex(bytes) != it->second.sha256)
    throw StaleArtifact(std::string(rel) + " does not match its manifest hash; re-run '" + it->second.stage + "'");
  // An artifact is stale when any artifact it was built from, directly or
  // not, changed since.
  std::vector<std::string> pending{std::string(rel)};
  std::set<std::string> seen;
  while (!pending.empty()) {
    const std::string current = pending.back();
    pending.pop_back();
    if (!seen.insert(current).second) continue;
    for (const auto& [input, sha] : entries_.at(current).inputs) {
      auto dep = entries_.find(input);
      if (dep == entries_.end()) continue;
      if (dep->second.sha256 != sha)
        throw StaleArtifact(std::string(rel) + " was built from an older " + input + "; re-run the stages after '" +
                            dep->second.stage + "'");
      pending.push_back(input);
    }
  }
  return bytes;
}

std::pair<std::string, std::string> Workspace::input(const fs::path& external) const {
  return {fs::proximate(external, root_).generic_string(), util::sha256_file(external)};
}

std::pair<std::string, std::string> Workspace::artifact_input(std::string_view rel) const {
  return {std::string(rel), entries_.at(std::string(rel)).sha256};
}

void Workspace::write(std::string_view rel, std::string_view bytes, std::string_view stage,
                      std::map<std::string, std::string> inputs) {
  write_atomic(path(rel), bytes);
  entries_[std::string(rel)] = Entry{util::sha256_hex(bytes), std::string(stage), std::move(inputs)};
  save();
}

void Workspace::rewrite(std::string_view rel, std::string_view bytes) {
  auto it = entries_.find(std::string(rel));
  if (it == entries_.end()) throw StageOrderError(std::string(rel) + " is not a recorded artifact");
  write_atomic(path(rel), bytes);
  it->second.sha256 = util::sha256_hex(bytes);
  save();
}

void Workspace::write_plain(std::string_view rel, std::string_view bytes) const { write_atomic(path(rel), bytes); }

}  // namespace onomast::pipeline
