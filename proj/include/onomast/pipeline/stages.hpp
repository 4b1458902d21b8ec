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

#ifndef ONOMAST_PIPELINE_STAGES_HPP_
#define ONOMAST_PIPELINE_STAGES_HPP_

#include <set>
#include <string>
#include <vector>

#include "onomast/cascade/entity.hpp"
#include "onomast/multitext/multitext.hpp"
#include "onomast/pipeline/config.hpp"
#include "onomast/pipeline/workspace.hpp"
#include "onomast/transfer/project.hpp"

namespace onomast::pipeline {

// Each stage returns the workspace paths it wrote.
std::vector<std::string> cmd_segment(const ProjectConfig& config, Workspace& ws);
std::vector<std::string> cmd_tag(const ProjectConfig& config, Workspace& ws);
// Resets the reviewed links of every bitext to the automatic alignment.
std::vector<std::string> cmd_align(const ProjectConfig& config, Workspace& ws);
std::vector<std::string> cmd_merge(const ProjectConfig& config, Workspace& ws);
// Re-applies the label overrides recorded since the last alignment.
std::vector<std::string> cmd_classify(const ProjectConfig& config, Workspace& ws);
std::vector<std::string> cmd_report(const ProjectConfig& config, Workspace& ws);

inline constexpr const char* kTaggedPath = "tagged/pivot.txt";
inline constexpr const char* kMultitextPath = "multitext.tsv";
inline constexpr const char* kMultitextHtmlPath = "multitext.html";

cascade::HypertypeMap load_hypertypes(const ProjectConfig& config);
std::set<std::string> load_function_words(const ProjectConfig& config);
std::vector<transfer::LexiconEntry> load_lexicon_entries(const ProjectConfig& config);
transfer::LanguageResources language_resources(const ProjectConfig& config, const std::string& lang);

// The tagged pivot and the merged multitext, rebuilt from workspace artifacts.
cascade::AnnotatedDocument load_annotated(const ProjectConfig& config, const Workspace& ws);
multitext::Multitext build_multitext(const ProjectConfig& config, const Workspace& ws);

}  // namespace onomast::pipeline

#endif  // ONOMAST_PIPELINE_STAGES_HPP_
