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

#include "onomast/pipeline/stages.hpp"

#include <algorithm>
#include <filesystem>
#include <sstream>

#include "onomast/aligner/align.hpp"
#include "onomast/cascade/cascade.hpp"
#include "onomast/cascade/grammar.hpp"
#include "onomast/corpus/segment.hpp"
#include "onomast/corpus/tei.hpp"
#include "onomast/error.hpp"
#include "onomast/pipeline/events.hpp"
#include "onomast/reporting/report.hpp"
#include "onomast/transfer/namepair.hpp"
#include "onomast/util/hash.hpp"

namespace onomast::pipeline {

namespace fs = std::filesystem;

using Inputs = std::map<std::string, std::string>;

namespace {

void add_input(Inputs& in, std::pair<std::string, std::string> kv) { in.insert(std::move(kv)); }

std::vector<fs::path> lexicon_files(const ProjectConfig& config) {
  std::vector<fs::path> out;
  for (const auto& entry : fs::directory_iterator(config.lexicons))
    if (entry.is_regular_file()) out.push_back(entry.path());
  std::sort(out.begin(), out.end());
  return out;
}

std::string params_digest(const ProjectConfig& config) {
  const aligner::CostParams& p = config.align;
  std::ostringstream s;
  s.precision(17);
  s << p.mean_ratio << ' ' << p.variance << ' ' << p.prior_one_one << ' ' << p.prior_one_two << ' '
    << p.omission_penalty << ' ' << p.cognate_bonus << ' ' << p.anchor_bonus << ' ' << p.min_cognate_length;
  return util::sha256_hex(s.str());
}

std::vector<std::string> labels(const ProjectConfig& config) {
  std::vector<std::string> out;
  for (const TextConfig& t : config.targets) out.push_back(t.label);
  return out;
}

}  // namespace

cascade::HypertypeMap load_hypertypes(const ProjectConfig& config) {
  if (!config.hypertypes) return cascade::HypertypeMap::defaults();
  return cascade::HypertypeMap::parse(read_file(*config.hypertypes));
}

std::set<std::string> load_function_words(const ProjectConfig& config) {
  std::set<std::string> out;
  if (!config.function_words) return out;
  std::istringstream in(read_file(*config.function_words));
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line[0] != '#') out.insert(line);
  }
  return out;
}

std::vector<transfer::LexiconEntry> load_lexicon_entries(const ProjectConfig& config) {
  if (!config.bilingual_lexicon) return {};
  return transfer::load_bilingual_lexicon(*config.bilingual_lexicon);
}

transfer::LanguageResources language_resources(const ProjectConfig& config, const std::string& lang) {
  return transfer::load_language_resources(config.transfer, lang, load_lexicon_entries(config), config.theta);
}

std::vector<std::string> cmd_segment(const ProjectConfig& config, Workspace& ws) {
  std::vector<const TextConfig*> texts{&config.pivot};
  for (const TextConfig& t : config.targets) texts.push_back(&t);
  std::vector<std::string> written;
  for (const TextConfig* t : texts) {
    Inputs in;
    add_input(in, ws.input(t->path));
    corpus::SegmentationRules rules;
    if (t->rules) {
      rules = corpus::load_segmentation_rules(*t->rules);
      add_input(in, ws.input(*t->rules));
    }
    const corpus::Document doc = corpus::segment_text(read_file(t->path), t->lang, rules, t->script);
    const std::string rel = tei_path(t == &config.pivot ? "pivot" : t->label);
    ws.write(rel, corpus::serialize_tei(doc), "segment", std::move(in));
    written.push_back(rel);
  }
  return written;
}

std::vector<std::string> cmd_tag(const ProjectConfig& config, Workspace& ws) {
  const std::string tei = ws.require(tei_path("pivot"), "segment");
  Inputs in;
  add_input(in, ws.artifact_input(tei_path("pivot")));
  add_input(in, ws.input(config.grammar));
  for (const fs::path& f : lexicon_files(config)) add_input(in, ws.input(f));
  if (config.hypertypes) add_input(in, ws.input(*config.hypertypes));

  const cascade::HypertypeMap types = load_hypertypes(config);
  cascade::Lexicons lexicons = cascade::load_lexicons(config.lexicons);
  auto grammars =
      cascade::compile_grammar_file(read_file(config.grammar), lexicons, types, config.grammar.filename().string());
  const cascade::Cascade cascade(std::move(grammars), std::move(lexicons));
  const corpus::Document doc = corpus::parse_tei(tei).document;
  ws.write(kTaggedPath, cascade::render_tagged(cascade::run_cascade(doc, cascade)), "tag", std::move(in));
  return {kTaggedPath};
}

std::vector<std::string> cmd_align(const ProjectConfig& config, Workspace& ws) {
  const corpus::Document pivot = corpus::parse_tei(ws.require(tei_path("pivot"), "segment")).document;
  std::vector<std::string> written;
  for (const std::string& label : labels(config)) {
    const corpus::Document target = corpus::parse_tei(ws.require(tei_path(label), "segment")).document;
    Inputs in;
    add_input(in, ws.artifact_input(tei_path("pivot")));
    add_input(in, ws.artifact_input(tei_path(label)));
    in.emplace("align-params", params_digest(config));
    const std::string links = aligner::write_links(aligner::align_bitext(pivot, target, config.align).links);
    ws.write(links_path(label, true), links, "align", in);
    ws.write(links_path(label), links, "align", in);
    written.push_back(links_path(label, true));
    written.push_back(links_path(label));

    BitextState state = read_state(ws, label);
    state.revision += 1;
    state.approved = false;
    append_event(ws, {label, state.revision, "align", utc_timestamp(), {{"kind", "reset"}}});
    write_state(ws, label, state);
  }
  return written;
}

cascade::AnnotatedDocument load_annotated(const ProjectConfig& config, const Workspace& ws) {
  const std::string tagged = ws.require(kTaggedPath, "tag");
  const corpus::Document doc = corpus::parse_tei(ws.require(tei_path("pivot"), "segment")).document;
  return cascade::parse_tagged(tagged, doc, load_hypertypes(config));
}

multitext::Multitext build_multitext(const ProjectConfig& config, const Workspace& ws) {
  cascade::AnnotatedDocument annotated = load_annotated(config, ws);
  std::vector<multitext::LabeledBitext> bitexts;
  for (const std::string& label : labels(config)) bitexts.push_back({label, load_bitext(ws, label, links_path(label))});
  return multitext::merge(std::move(annotated), std::move(bitexts));
}

std::vector<std::string> cmd_merge(const ProjectConfig& config, Workspace& ws) {
  const multitext::Multitext mt = build_multitext(config, ws);
  Inputs in;
  add_input(in, ws.artifact_input(kTaggedPath));
  add_input(in, ws.artifact_input(tei_path("pivot")));
  for (const std::string& label : labels(config)) {
    add_input(in, ws.artifact_input(tei_path(label)));
    add_input(in, ws.artifact_input(links_path(label)));
  }
  ws.write(kMultitextPath, multitext::export_table(mt, multitext::TableFormat::tsv), "merge", in);
  ws.write(kMultitextHtmlPath, multitext::export_table(mt, multitext::TableFormat::html), "merge", in);
  return {kMultitextPath, kMultitextHtmlPath};
}

std::vector<std::string> cmd_classify(const ProjectConfig& config, Workspace& ws) {
  ws.require(kMultitextPath, "merge");
  const multitext::Multitext mt = build_multitext(config, ws);
  const transfer::PivotContext context = transfer::pivot_context(mt.pivot, load_function_words(config));

  Inputs in;
  add_input(in, ws.artifact_input(kMultitextPath));
  for (const fs::path& f : config.resource_files()) add_input(in, ws.input(f));
  in.emplace("theta", util::sha256_hex(std::to_string(config.theta)));

  std::vector<std::string> written;
  for (std::size_t c = 0; c < mt.columns.size(); ++c) {
    const std::string& label = mt.columns[c].label;
    Inputs col = in;
    const auto resources = language_resources(config, mt.columns[c].lang);
    for (const char* sub : {"translit", "respell"}) {
      const fs::path f = config.transfer / sub / (mt.columns[c].lang + ".tsv");
      if (fs::exists(f)) add_input(col, ws.input(f));
    }
    if (const fs::path f = config.transfer / "inflection" / (mt.columns[c].lang + ".rules"); fs::exists(f))
      add_input(col, ws.input(f));

    std::vector<transfer::NamePair> pairs = transfer::classify_column(mt, c, resources, context);
    ws.write(pairs_path(label, true), transfer::write_pairs(pairs), "classify", col);
    for (const EditEvent& e : current_events(read_events(ws, label))) {
      if (e.payload.value("kind", "") != "override") continue;
      try {
        apply_override(pairs, e.payload.at("pair").get<std::string>(),
                       transfer::parse_label(e.payload.at("label").get<std::string>()), e.payload.value("note", ""));
      } catch (const QueryError&) {
      }
    }
    ws.write(pairs_path(label), transfer::write_pairs(pairs), "classify", col);
    written.push_back(pairs_path(label, true));
    written.push_back(pairs_path(label));
  }
  return written;
}

std::vector<std::string> cmd_report(const ProjectConfig& config, Workspace& ws) {
  const cascade::AnnotatedDocument annotated = load_annotated(config, ws);
  Inputs in;
  add_input(in, ws.artifact_input(kTaggedPath));
  add_input(in, ws.artifact_input(tei_path("pivot")));

  reporting::Report report;
  report.inventory = reporting::np_inventory(annotated);
  report.sample = reporting::top_frequency_sample(annotated);
  reporting::ProcedureMatrix matrix;
  std::size_t pairs_total = 0;
  for (const std::string& label : labels(config)) {
    const auto pairs = transfer::read_pairs(ws.require(pairs_path(label), "classify"));
    add_input(in, ws.artifact_input(pairs_path(label)));
    if (pairs.empty()) continue;
    pairs_total += pairs.size();
    for (reporting::MatrixRow row : reporting::procedure_matrix(pairs).rows) {
      row.lang = label;
      matrix.rows.push_back(std::move(row));
    }
  }
  report.matrix = std::move(matrix);
  report.basis = "all " + std::to_string(pairs_total) + " reviewed name pairs, one row per target text";

  const std::pair<const char*, reporting::ReportFormat> outputs[] = {{"reports/report.md", reporting::ReportFormat::markdown},
                                                                      {"reports/report.tsv", reporting::ReportFormat::tsv},
                                                                      {"reports/report.json", reporting::ReportFormat::json}};
  std::vector<std::string> written;
  for (const auto& [rel, format] : outputs) {
    ws.write(rel, reporting::emit_report(report, format), "report", in);
    written.push_back(rel);
  }
  return written;
}

}  // namespace onomast::pipeline
