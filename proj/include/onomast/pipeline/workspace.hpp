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

#ifndef ONOMAST_PIPELINE_WORKSPACE_HPP_
#define ONOMAST_PIPELINE_WORKSPACE_HPP_

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

namespace onomast::pipeline {

std::string read_file(const std::filesystem::path& path);
// Writes a sibling temp file, then renames it over `path`.
void write_atomic(const std::filesystem::path& path, std::string_view bytes);

// Artifact files plus manifest.json recording each artifact's hash, the
// stage that wrote it and the hashes of its inputs.
class Workspace {
 public:
  struct Entry {
    std::string sha256;
    std::string stage;
    std::map<std::string, std::string> inputs;
  };

  explicit Workspace(std::filesystem::path root);

  const std::filesystem::path& root() const { return root_; }
  std::filesystem::path path(std::string_view rel) const { return root_ / std::string(rel); }
  bool has(std::string_view rel) const { return entries_.count(std::string(rel)) > 0; }
  const std::map<std::string, Entry>& entries() const { return entries_; }

  // Contents of a recorded artifact. Throws StageOrderError when the stage
  // that makes it has not run, StaleArtifact when the file or any of its
  // workspace inputs, direct or transitive, changed since.
  std::string require(std::string_view rel, std::string_view needed_stage) const;

  // Key and hash for an input: workspace artifacts by relative path,
  // external files by path relative to the workspace.
  std::pair<std::string, std::string> input(const std::filesystem::path& external) const;
  std::pair<std::string, std::string> artifact_input(std::string_view rel) const;

  void write(std::string_view rel, std::string_view bytes, std::string_view stage,
             std::map<std::string, std::string> inputs);
  // Replaces the contents of an existing artifact, keeping its stage and inputs.
  void rewrite(std::string_view rel, std::string_view bytes);

  // Plain files outside the manifest (event logs, review state).
  void write_plain(std::string_view rel, std::string_view bytes) const;

 private:
  void save() const;

  std::filesystem::path root_;
  std::map<std::string, Entry> entries_;
};

}  // namespace onomast::pipeline

#endif  // ONOMAST_PIPELINE_WORKSPACE_HPP_
