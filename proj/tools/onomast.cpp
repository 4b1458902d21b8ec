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

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "httplib.h"
#include "onomast/error.hpp"
#include "onomast/pipeline/config.hpp"
#include "onomast/pipeline/events.hpp"
#include "onomast/pipeline/review.hpp"
#include "onomast/pipeline/stages.hpp"
#include "onomast/pipeline/workspace.hpp"

namespace {

using namespace onomast;
using pipeline::ProjectConfig;
using pipeline::Workspace;

using StageFn = std::vector<std::string> (*)(const ProjectConfig&, Workspace&);

int run_stage(const ProjectConfig& config, StageFn stage) {
  Workspace ws(config.workspace);
  for (const std::string& rel : stage(config, ws)) std::cout << (ws.root() / rel).string() << '\n';
  return 0;
}

int run_replay(const ProjectConfig& config) {
  const Workspace ws(config.workspace);
  int mismatches = 0;
  for (const pipeline::TextConfig& t : config.targets) {
    if (!ws.has(pipeline::links_path(t.label))) continue;
    const auto replayed = pipeline::replay(config, ws, t.label);
    const bool links_ok = aligner::write_links(replayed.links) ==
                          pipeline::read_file(ws.path(pipeline::links_path(t.label)));
    bool pairs_ok = true;
    if (replayed.pairs && ws.has(pipeline::pairs_path(t.label)))
      pairs_ok = transfer::write_pairs(*replayed.pairs) ==
                 pipeline::read_file(ws.path(pipeline::pairs_path(t.label)));
    std::cout << t.label << ": links " << (links_ok ? "match" : "differ") << ", pairs "
              << (pairs_ok ? "match" : "differ") << '\n';
    if (!links_ok || !pairs_ok) ++mismatches;
  }
  return mismatches == 0 ? 0 : 1;
}

int run_review(const ProjectConfig& config, int port, const std::string& ui_dir) {
  pipeline::ReviewService service(config, ui_dir);
  httplib::Server server;
  const auto forward = [&service](const httplib::Request& req, httplib::Response& res) {
    const pipeline::Response r = service.handle(req.method, req.path, req.body);
    res.status = r.status;
    res.set_content(r.body, r.content_type);
  };
  server.Get(".*", forward);
  server.Post(".*", forward);
  server.Put(".*", forward);
  server.Delete(".*", forward);
  std::cout << "review service on http://127.0.0.1:" << port << "/" << std::endl;
  if (!server.listen("127.0.0.1", port)) {
    std::cerr << "onomast: cannot listen on 127.0.0.1:" << port << '\n';
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proper-name pipeline over a pivot text and its translations"};
  app.require_subcommand(1);
  std::string config_path = "onomast.ini";
  std::string workspace;
  app.add_option("--config", config_path, "Project config file")->capture_default_str();
  app.add_option("--workspace", workspace, "Workspace directory, overriding the config");

  const std::pair<const char*, const char*> stages[] = {
      {"segment", "Segment every text into TEI"},
      {"tag", "Tag proper names in the pivot"},
      {"align", "Align every target with the pivot"},
      {"merge", "Merge the bitexts into the multitext"},
      {"classify", "Classify the translation of every pivot name"},
      {"report", "Write the inventory, sample and procedure tables"},
  };
  for (const auto& [name, help] : stages) app.add_subcommand(name, help);
  CLI::App* review = app.add_subcommand("review", "Serve the review API on the loopback interface");
  int port = 7878;
  std::string ui_dir = ONOMAST_UI_DIR;
  review->add_option("--port", port, "TCP port")->capture_default_str()->check(CLI::Range(1, 65535));
  review->add_option("--ui-dir", ui_dir, "Directory of the static review client")->capture_default_str();
  app.add_subcommand("replay", "Check that the event logs reproduce the reviewed artifacts");

  CLI11_PARSE(app, argc, argv);

  try {
    ProjectConfig config = pipeline::load_config(config_path);
    if (!workspace.empty()) config.workspace = std::filesystem::absolute(workspace);
    const std::string name = app.get_subcommands().front()->get_name();
    if (name == "segment") return run_stage(config, pipeline::cmd_segment);
    if (name == "tag") return run_stage(config, pipeline::cmd_tag);
    if (name == "align") return run_stage(config, pipeline::cmd_align);
    if (name == "merge") return run_stage(config, pipeline::cmd_merge);
    if (name == "classify") return run_stage(config, pipeline::cmd_classify);
    if (name == "report") return run_stage(config, pipeline::cmd_report);
    if (name == "review") return run_review(config, port, ui_dir);
    return run_replay(config);
  } catch (const onomast::Error& e) {
    std::cerr << "onomast: " << e.kind() << ": " << e.what() << '\n';
    return 1;
  }
}
