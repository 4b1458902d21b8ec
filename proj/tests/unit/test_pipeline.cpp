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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "onomast/aligner/bitext.hpp"
#include "onomast/error.hpp"
#include "onomast/pipeline/config.hpp"
#include "onomast/pipeline/events.hpp"
#include "onomast/pipeline/review.hpp"
#include "onomast/pipeline/stages.hpp"
#include "onomast/pipeline/workspace.hpp"
#include "onomast/reporting/report.hpp"
#include "onomast/transfer/namepair.hpp"

using namespace onomast;
using namespace onomast::pipeline;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const fs::path kSource = ONOMAST_SOURCE_DIR;

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("onomast-test-" + std::to_string(rd()) + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

ProjectConfig toy_config(const fs::path& workspace) {
  ProjectConfig c = load_config(kSource / "corpus/toy/toy.ini");
  c.workspace = workspace;
  return c;
}

void run_all(const ProjectConfig& c) {
  Workspace ws(c.workspace);
  cmd_segment(c, ws);
  cmd_tag(c, ws);
  cmd_align(c, ws);
  cmd_merge(c, ws);
  cmd_classify(c, ws);
  cmd_report(c, ws);
}

std::map<std::string, std::string> snapshot(const fs::path& root) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::recursive_directory_iterator(root)) {
    if (!e.is_regular_file()) continue;
    const std::string rel = fs::relative(e.path(), root).generic_string();
    if (rel.rfind("events/", 0) == 0) continue;
    out[rel] = read_file(e.path());
  }
  return out;
}

void write_text(const fs::path& p, const std::string& text) {
  fs::create_directories(p.parent_path());
  std::ofstream(p, std::ios::binary) << text;
}

std::string minimal_config(const std::string& extra) {
  return "[pivot]\nlang = fr\npath = fr.txt\n[target:ENG]\nlang = en\npath = en.txt\n[resources]\ngrammar = "
         "g.grm\nlexicons = lex\ntransfer = .\n" +
         extra;
}

json body_of(const Response& r) { return json::parse(r.body); }

}  // namespace

TEST_CASE("config parsing and errors") {
  TempDir dir;
  write_text(dir.path() / "fr.txt", "Un.");
  write_text(dir.path() / "en.txt", "One.");
  write_text(dir.path() / "g.grm", "");
  fs::create_directories(dir.path() / "lex");

  ProjectConfig c = parse_config(minimal_config("[align]\nvariance = 5\n[classify]\ntheta = 0.2\n"), dir.path());
  CHECK(c.pivot.lang == "fr");
  REQUIRE(c.targets.size() == 1);
  CHECK(c.targets[0].label == "ENG");
  CHECK(c.align.variance == 5.0);
  CHECK(c.theta == 0.2);
  CHECK(c.workspace == dir.path() / "workspace");
  CHECK(c.target("ENG").lang == "en");
  CHECK_THROWS_AS(c.target("SRP"), ConfigError);

  CHECK_THROWS_AS(parse_config(minimal_config("[bogus]\nx = 1\n"), dir.path()), ConfigError);
  CHECK_THROWS_AS(parse_config(minimal_config("[align]\nwhatever = 1\n"), dir.path()), ConfigError);
  CHECK_THROWS_AS(parse_config(minimal_config("[classify]\ntheta = 1.5\n"), dir.path()), ConfigError);
  CHECK_THROWS_AS(parse_config(minimal_config("[align]\nvariance = 0\n"), dir.path()), ConfigError);
  CHECK_THROWS_AS(parse_config(minimal_config("[align]\nvariance = abc\n"), dir.path()), ConfigError);
  CHECK_THROWS_AS(parse_config(minimal_config("[target:pivot]\nlang = en\npath = en.txt\n"), dir.path()), ConfigError);
  CHECK_THROWS_AS(parse_config(minimal_config("[align]\nmin_cognate_length = 2.5\n"), dir.path()), ConfigError);
  CHECK_THROWS_AS(parse_config(minimal_config("[target:ENG]\nlang = de\npath = en.txt\n"), dir.path()), ConfigError);
  CHECK_THROWS_AS(parse_config(minimal_config("[target:a.b]\nlang = de\npath = en.txt\n"), dir.path()), ConfigError);
  CHECK(parse_config(minimal_config("[target:SRP]\nlang = sr\npath = en.txt\n"), dir.path()).targets.size() == 2);
  fs::remove(dir.path() / "en.txt");
  CHECK_THROWS_AS(parse_config(minimal_config(""), dir.path()), ConfigError);
}

TEST_CASE("stages run in order") {
  TempDir dir;
  const ProjectConfig c = toy_config(dir.path());
  Workspace ws(c.workspace);
  CHECK_THROWS_AS(cmd_align(c, ws), StageOrderError);
  CHECK_THROWS_AS(cmd_tag(c, ws), StageOrderError);
  cmd_segment(c, ws);
  CHECK_THROWS_AS(cmd_merge(c, ws), StageOrderError);
  CHECK_THROWS_AS(cmd_classify(c, ws), StageOrderError);
  cmd_tag(c, ws);
  cmd_align(c, ws);
  CHECK_THROWS_AS(cmd_report(c, ws), StageOrderError);
  cmd_merge(c, ws);
  cmd_classify(c, ws);
  cmd_report(c, ws);
  CHECK(fs::exists(dir.path() / "reports/report.json"));
  const auto matrix = reporting::matrix_from_json(read_file(dir.path() / "reports/report.json"));
  REQUIRE(matrix.rows.size() == 2);
  for (const auto& row : matrix.rows) {
    double sum = 0;
    for (transfer::ProcedureLabel l : transfer::kProcedureLabels) sum += row.percent(l);
    CHECK(sum == doctest::Approx(100.0).epsilon(0.002));
  }
}

TEST_CASE("re-running a stage on unchanged inputs is byte-identical") {
  TempDir dir;
  const ProjectConfig c = toy_config(dir.path());
  Workspace ws(c.workspace);
  cmd_segment(c, ws);
  cmd_tag(c, ws);
  const std::string first = read_file(dir.path() / kTaggedPath);
  const std::string manifest = read_file(dir.path() / "manifest.json");
  cmd_tag(c, ws);
  CHECK(read_file(dir.path() / kTaggedPath) == first);
  CHECK(read_file(dir.path() / "manifest.json") == manifest);
}

TEST_CASE("identical config and inputs give identical artifacts") {
  TempDir a, b;
  run_all(toy_config(a.path()));
  run_all(toy_config(b.path()));
  const auto sa = snapshot(a.path());
  const auto sb = snapshot(b.path());
  CHECK(sa.size() == sb.size());
  for (const auto& [rel, bytes] : sa) {
    CAPTURE(rel);
    REQUIRE(sb.count(rel) == 1);
    CHECK(sb.at(rel) == bytes);
  }
}

TEST_CASE("changed or damaged artifacts are rejected") {
  TempDir dir;
  const ProjectConfig c = toy_config(dir.path());
  run_all(c);
  {
    // A truncated file, as a killed run could leave behind.
    const fs::path mt = dir.path() / kMultitextPath;
    const std::string bytes = read_file(mt);
    write_text(mt, bytes.substr(0, bytes.size() / 2));
    Workspace ws(c.workspace);
    CHECK_THROWS_AS(cmd_classify(c, ws), StaleArtifact);
    write_text(mt, bytes);
    CHECK_NOTHROW(cmd_classify(c, ws));
  }
  {
    // Re-tagging with another grammar leaves the later stages stale.
    TempDir other;
    fs::copy(kSource / "corpus/toy", other.path(), fs::copy_options::recursive);
    ProjectConfig changed = c;
    changed.grammar = other.path() / "demo.grm";
    write_text(changed.grammar, read_file(c.grammar) + "\n70  \"whist\"  => event(1..1)\n");
    Workspace ws(c.workspace);
    cmd_tag(changed, ws);
    CHECK_THROWS_AS(cmd_classify(changed, ws), StaleArtifact);
    CHECK_THROWS_AS(cmd_report(changed, ws), StaleArtifact);
    cmd_merge(changed, ws);
    CHECK_THROWS_AS(cmd_report(changed, ws), StaleArtifact);
    cmd_classify(changed, ws);
    CHECK_NOTHROW(cmd_report(changed, ws));
  }
}

TEST_CASE("review API") {
  TempDir dir;
  const ProjectConfig c = toy_config(dir.path());
  run_all(c);
  ReviewService service(c, kSource / "resources/ui");

  SUBCASE("project summary and static files") {
    const Response r = service.handle("GET", "/api/project", "");
    CHECK(r.status == 200);
    const json p = body_of(r);
    CHECK(p["name"] == "toy");
    REQUIRE(p["bitexts"].size() == 2);
    CHECK(p["bitexts"][0]["label"] == "ENG");
    CHECK(p["bitexts"][0]["revision"] == 1);
    CHECK(service.handle("GET", "/", "").content_type.rfind("text/html", 0) == 0);
    CHECK(service.handle("GET", "/../toy.ini", "").status == 404);
    CHECK(service.handle("GET", "/api/bitext/XXX", "").status == 404);
    CHECK(service.handle("DELETE", "/api/project", "").status == 405);
  }

  SUBCASE("stale revision is a conflict and changes nothing") {
    const std::string before = read_file(dir.path() / links_path("ENG"));
    const Response r = service.handle("POST", "/api/bitext/ENG/edits",
                                      R"({"revision": 0, "actor": "t", "edits": [{"op": "merge", "index": 0}]})");
    CHECK(r.status == 409);
    CHECK(body_of(r)["error"] == "EditConflict");
    CHECK(read_file(dir.path() / links_path("ENG")) == before);
    CHECK(body_of(service.handle("GET", "/api/bitext/ENG", ""))["revision"] == 1);
    CHECK(read_events(Workspace(c.workspace), "ENG").size() == 1);
  }

  SUBCASE("split then read back") {
    const json bitext = body_of(service.handle("GET", "/api/bitext/ENG", ""));
    std::size_t index = 0;
    for (std::size_t i = 0; i < bitext["links"].size(); ++i)
      if (bitext["links"][i]["kind"] == "1:2") index = i;
    REQUIRE(bitext["links"][index]["kind"] == "1:2");
    const std::size_t count = bitext["links"].size();

    json edit = {{"revision", 1},
                 {"actor", "t"},
                 {"edits", {{{"op", "split"}, {"index", index}, {"pivot_cut", 1}, {"target_cut", 1}}}}};
    const Response r = service.handle("POST", "/api/bitext/ENG/edits", edit.dump());
    REQUIRE(r.status == 200);
    const json after = body_of(service.handle("GET", "/api/bitext/ENG", ""));
    CHECK(after["revision"] == 2);
    CHECK(after["links"].size() == count + 1);
    CHECK(after["links"][index]["kind"] == "1:1");
    CHECK(after["links"][index]["status"] == "edited");
    CHECK(after["links"][index + 1]["kind"] == "0:1");

    // The same edit again is now stale.
    CHECK(service.handle("POST", "/api/bitext/ENG/edits", edit.dump()).status == 409);

    // Manifest stays consistent; later stages see the edit as new input.
    Workspace ws(c.workspace);
    CHECK_NOTHROW(ws.require(links_path("ENG"), "align"));
    CHECK_THROWS_AS(cmd_classify(c, ws), StaleArtifact);
    CHECK_NOTHROW(cmd_merge(c, ws));

    // A fresh service over the same workspace sees the same state.
    ReviewService restarted(c);
    CHECK(body_of(restarted.handle("GET", "/api/bitext/ENG", "")) == after);

    const ReplayResult replayed = replay(c, ws, "ENG");
    CHECK(aligner::write_links(replayed.links) == read_file(dir.path() / links_path("ENG")));
  }

  SUBCASE("invalid edits are rejected with violations") {
    const Response merge = service.handle("POST", "/api/bitext/ENG/edits",
                                          R"({"revision": 1, "edits": [{"op": "merge", "index": 0}]})");
    CHECK(merge.status == 422);
    CHECK(body_of(merge)["violations"].is_array());
    const Response missing = service.handle("POST", "/api/bitext/ENG/edits",
                                            R"({"revision": 1, "edits": [{"op": "confirm", "index": 9999}]})");
    CHECK(missing.status == 409);
    CHECK(service.handle("POST", "/api/bitext/ENG/edits", "{not json").status == 400);
    CHECK(service.handle("POST", "/api/bitext/ENG/edits", R"({"revision": 1, "edits": [{"op": "twist"}]})").status ==
          400);
    CHECK(body_of(service.handle("GET", "/api/bitext/ENG", ""))["revision"] == 1);
  }

  SUBCASE("label override reaches the report and survives replay") {
    const json pairs = body_of(service.handle("GET", "/api/pairs/ENG", ""));
    CHECK(pairs["stale"] == false);
    REQUIRE(pairs["pairs"][0]["id"] == "d1p1s1#0");
    CHECK(pairs["pairs"][0]["label"] == "Borrowing");

    CHECK(service.handle("POST", "/api/pairs/ENG/overrides",
                         R"({"revision": 1, "pair": "d1p1s1#0", "label": "Other"})")
              .status == 422);
    CHECK(service.handle("POST", "/api/pairs/ENG/overrides",
                         R"({"revision": 1, "pair": "d9p9s9#0", "label": "Other", "note": "x"})")
              .status == 404);
    const Response r = service.handle(
        "POST", "/api/pairs/ENG/overrides",
        R"({"revision": 1, "actor": "t", "pair": "d1p1s1#0", "label": "Other", "note": "street name kept as a title"})");
    REQUIRE(r.status == 200);
    const json updated = body_of(r);
    CHECK(updated["revision"] == 2);
    CHECK(updated["pairs"][0]["label"] == "Other");
    CHECK(updated["pairs"][0]["note"] == "street name kept as a title");

    Workspace ws(c.workspace);
    cmd_report(c, ws);
    const auto matrix = reporting::matrix_from_json(read_file(dir.path() / "reports/report.json"));
    REQUIRE(matrix.rows[0].lang == "ENG");
    CHECK(matrix.rows[0].counts[0] == 51);
    CHECK(matrix.rows[0].counts[4] == 1);

    // Re-classifying keeps the override; re-aligning drops it.
    cmd_classify(c, ws);
    CHECK(transfer::read_pairs(read_file(dir.path() / pairs_path("ENG")))[0].label == transfer::ProcedureLabel::Other);
    const ReplayResult replayed = replay(c, ws, "ENG");
    REQUIRE(replayed.pairs);
    CHECK(transfer::write_pairs(*replayed.pairs) == read_file(dir.path() / pairs_path("ENG")));

    cmd_align(c, ws);
    CHECK(read_state(ws, "ENG").revision == 3);
    cmd_merge(c, ws);
    cmd_classify(c, ws);
    CHECK(transfer::read_pairs(read_file(dir.path() / pairs_path("ENG")))[0].label ==
          transfer::ProcedureLabel::Borrowing);
  }

  SUBCASE("absence override clears the span") {
    const Response r = service.handle("POST", "/api/pairs/SRP/overrides",
                                      R"({"revision": 1, "pair": "d1p1s1#2", "label": "Absence"})");
    REQUIRE(r.status == 200);
    CHECK(body_of(r)["pairs"][2]["target"].is_null());
  }

  SUBCASE("approval freezes the bitext") {
    CHECK(service.handle("POST", "/api/bitext/SRP/approve", R"({"revision": 0})").status == 409);
    const Response r = service.handle("POST", "/api/bitext/SRP/approve", R"({"revision": 1})");
    REQUIRE(r.status == 200);
    CHECK(body_of(r)["approved"] == true);
    CHECK(service.handle("POST", "/api/bitext/SRP/edits",
                         R"({"revision": 2, "edits": [{"op": "confirm", "index": 0}]})")
              .status == 409);
    const auto events = read_events(Workspace(c.workspace), "SRP");
    REQUIRE(events.size() == 2);
    CHECK(events[0].payload["kind"] == "reset");
    CHECK(events[1].payload["kind"] == "approve");
    CHECK(events[1].revision == 2);
  }
}

TEST_CASE("concurrent writers are serialized by the revision check") {
  TempDir dir;
  const ProjectConfig c = toy_config(dir.path());
  run_all(c);
  ReviewService service(c);
  std::vector<int> statuses(8);
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < statuses.size(); ++i)
    threads.emplace_back([&, i] {
      statuses[i] = service.handle("POST", "/api/bitext/ENG/edits",
                                   R"({"revision": 1, "edits": [{"op": "confirm", "index": 0}]})")
                        .status;
    });
  for (auto& t : threads) t.join();
  CHECK(std::count(statuses.begin(), statuses.end(), 200) == 1);
  CHECK(std::count(statuses.begin(), statuses.end(), 409) == 7);
  const auto events = read_events(Workspace(c.workspace), "ENG");
  REQUIRE(events.size() == 2);
  CHECK(events[0].revision < events[1].revision);
}

TEST_CASE("event log tolerates a torn last line") {
  TempDir dir;
  Workspace ws(dir.path());
  append_event(ws, {"ENG", 1, "t", utc_timestamp(), {{"kind", "reset"}}});
  std::ofstream(dir.path() / events_path("ENG"), std::ios::app) << R"({"bitext": "ENG", "revis)";
  CHECK(read_events(ws, "ENG").size() == 1);
  std::ofstream(dir.path() / events_path("ENG"), std::ios::app) << "\n";
  CHECK_THROWS_AS(read_events(ws, "ENG"), ParseError);
}

TEST_CASE("edit payloads round-trip") {
  const std::vector<aligner::Edit> edits = {aligner::edit::Merge{3}, aligner::edit::Confirm{0},
                                            aligner::edit::Split{2, 1, 0},
                                            aligner::edit::Retype{1, 2, {{1, 2}, {0, 1}}}};
  for (const aligner::Edit& e : edits) CHECK(edit_to_json(edit_from_json(edit_to_json(e))) == edit_to_json(e));
  CHECK_THROWS_AS(edit_from_json(json{{"op", "retype"}, {"first", 0}, {"count", 1}, {"shapes", {"3"}}}), ParseError);
}
