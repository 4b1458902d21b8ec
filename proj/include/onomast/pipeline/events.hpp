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

#ifndef ONOMAST_PIPELINE_EVENTS_HPP_
#define ONOMAST_PIPELINE_EVENTS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "onomast/aligner/align.hpp"
#include "onomast/pipeline/config.hpp"
#include "onomast/pipeline/workspace.hpp"
#include "onomast/transfer/namepair.hpp"

namespace onomast::pipeline {

// payload.kind is one of "reset", "links", "override", "approve".
struct EditEvent {
  std::string bitext;
  std::uint64_t revision = 0;
  std::string actor;
  std::string timestamp;
  nlohmann::json payload;
};

std::string events_path(const std::string& label);
std::vector<EditEvent> read_events(const Workspace& ws, const std::string& label);
void append_event(const Workspace& ws, const EditEvent& event);
std::string utc_timestamp();

struct BitextState {
  std::uint64_t revision = 0;
  bool approved = false;
};

BitextState read_state(const Workspace& ws, const std::string& label);
void write_state(const Workspace& ws, const std::string& label, const BitextState& state);

aligner::Edit edit_from_json(const nlohmann::json& j);
nlohmann::json edit_to_json(const aligner::Edit& e);

// Sets label and note; Absence drops the target span. Throws InvalidEdit
// for Other without a note, QueryError for an unknown pair id.
void apply_override(std::vector<transfer::NamePair>& pairs, const std::string& id, transfer::ProcedureLabel label,
                    const std::string& note);

// Events after the last reset.
std::vector<EditEvent> current_events(const std::vector<EditEvent>& all);

std::string links_path(const std::string& label, bool automatic = false);
std::string pairs_path(const std::string& label, bool automatic = false);
std::string tei_path(const std::string& label);

aligner::Bitext load_bitext(const Workspace& ws, const std::string& label, const std::string& links_rel);

struct ReplayResult {
  std::vector<aligner::AlignmentLink> links;
  std::optional<std::vector<transfer::NamePair>> pairs;
};

// Applies the current events to the automatic artifacts.
ReplayResult replay(const ProjectConfig& config, const Workspace& ws, const std::string& label);

}  // namespace onomast::pipeline

#endif  // ONOMAST_PIPELINE_EVENTS_HPP_
