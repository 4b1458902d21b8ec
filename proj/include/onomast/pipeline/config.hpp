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

#ifndef ONOMAST_PIPELINE_CONFIG_HPP_
#define ONOMAST_PIPELINE_CONFIG_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "onomast/aligner/cost.hpp"
#include "onomast/text/unicode.hpp"

namespace onomast::pipeline {

struct TextConfig {
  std::string label;
  std::string lang;
  text::Script script = text::Script::latin;
  std::filesystem::path path;
  // Segmentation rules; none means no abbreviations or division markers.
  std::optional<std::filesystem::path> rules;
};

struct ProjectConfig {
  std::filesystem::path config_path;
  std::string name;
  std::filesystem::path workspace;
  TextConfig pivot;
  std::vector<TextConfig> targets;

  std::filesystem::path grammar;
  std::filesystem::path lexicons;
  std::optional<std::filesystem::path> hypertypes;
  // Holds translit/, respell/ and inflection/.
  std::filesystem::path transfer;
  std::optional<std::filesystem::path> bilingual_lexicon;
  std::optional<std::filesystem::path> function_words;

  aligner::CostParams align;
  double theta = 0.34;

  const TextConfig& target(std::string_view label) const;
  // Every file the config refers to, for input hashing.
  std::vector<std::filesystem::path> resource_files() const;
};

// INI file; relative paths resolve against the config's directory.
ProjectConfig parse_config(std::string_view text, const std::filesystem::path& base_dir);
ProjectConfig load_config(const std::filesystem::path& path);

}  // namespace onomast::pipeline

#endif  // ONOMAST_PIPELINE_CONFIG_HPP_
