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

#include "onomast/pipeline/config.hpp"

#include <algorithm>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "onomast/error.hpp"

namespace onomast::pipeline {

namespace fs = std::filesystem;
namespace pt = boost::property_tree;

const TextConfig& ProjectConfig::target(std::string_view label) const {
  for (const TextConfig& t : targets)
    if (t.label == label) return t;
  throw ConfigError("no target labelled '" + std::string(label) + "'");
}

std::vector<fs::path> ProjectConfig::resource_files() const {
  std::vector<fs::path> out{grammar};
  if (hypertypes) out.push_back(*hypertypes);
  if (bilingual_lexicon) out.push_back(*bilingual_lexicon);
  if (function_words) out.push_back(*function_words);
  return out;
}

namespace {

const std::map<std::string, std::set<std::string>> kKeys = {
    {"project", {"name", "workspace"}},
    {"pivot", {"lang", "path", "script", "rules"}},
    {"target", {"lang", "path", "script", "rules"}},
    {"resources", {"grammar", "lexicons", "transfer", "hypertypes", "bilingual", "function_words"}},
    {"align",
     {"mean_ratio", "variance", "prior_one_one", "prior_one_two", "omission_penalty", "cognate_bonus", "anchor_bonus",
      "min_cognate_length"}},
    {"classify", {"theta"}},
};

std::string required(const pt::ptree& section, const std::string& name, const std::string& key) {
  auto v = section.get_optional<std::string>(key);
  if (!v || v->empty()) throw ConfigError("[" + name + "] needs '" + key + "'");
  return *v;
}

fs::path resolve(const fs::path& base, const std::string& value) {
  fs::path p(value);
  return (p.is_absolute() ? p : base / p).lexically_normal();
}

fs::path existing(const fs::path& p, const std::string& what) {
  if (!fs::exists(p)) throw ConfigError(what + " not found: " + p.string());
  return p;
}

double number(const pt::ptree& section, const std::string& key, double fallback) {
  auto v = section.get_optional<std::string>(key);
  if (!v) return fallback;
  try {
    std::size_t used = 0;
    const double d = std::stod(*v, &used);
    if (used != v->size()) throw std::invalid_argument(*v);
    return d;
  } catch (const std::exception&) {
    throw ConfigError("'" + key + "' is not a number: " + *v);
  }
}

TextConfig text_config(const pt::ptree& section, const std::string& name, const std::string& label,
                       const fs::path& base) {
  TextConfig t;
  t.label = label;
  t.lang = required(section, name, "lang");
  t.path = existing(resolve(base, required(section, name, "path")), "[" + name + "] path");
  try {
    t.script = text::parse_script(section.get<std::string>("script", "latin"));
  } catch (const Error& e) {
    throw ConfigError("[" + name + "] " + e.what());
  }
  if (auto r = section.get_optional<std::string>("rules"))
    t.rules = existing(resolve(base, *r), "[" + name + "] rules");
  for (const auto& [key, value] : section)
    if (key != "lang" && key != "path" && key != "script" && key != "rules")
      throw ConfigError("[" + name + "] unknown key '" + key + "'");
  return t;
}

}  // namespace

ProjectConfig parse_config(std::string_view text, const fs::path& base_dir) {
  pt::ptree tree;
  std::istringstream in{std::string(text)};
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError("config: " + e.message() + " (line " + std::to_string(e.line()) + ")");
  }
  ProjectConfig c;
  const pt::ptree empty;
  for (const auto& [name, section] : tree) {
    if (section.empty() && !section.data().empty()) throw ConfigError("key '" + name + "' outside any section");
    const auto keys = kKeys.find(name.rfind("target:", 0) == 0 ? std::string("target") : name);
    if (keys == kKeys.end()) throw ConfigError("unknown section [" + name + "]");
    for (const auto& [key, value] : section)
      if (!keys->second.count(key)) throw ConfigError("unknown key '" + key + "' in [" + name + "]");
  }

  const pt::ptree& project = tree.get_child("project", empty);
  c.name = project.get<std::string>("name", "onomast");
  c.workspace = resolve(base_dir, project.get<std::string>("workspace", "workspace"));

  if (!tree.get_child_optional("pivot")) throw ConfigError("missing [pivot] section");
  c.pivot = text_config(tree.get_child("pivot"), "pivot", "pivot", base_dir);

  std::set<std::string> labels;
  for (const auto& [name, section] : tree) {
    if (name.rfind("target:", 0) != 0) continue;
    const std::string label = name.substr(7);
    if (label.empty() || label.find_first_of("/\\. \t") != std::string::npos || label == "pivot")
      throw ConfigError("bad target label '" + label + "'");
    if (!labels.insert(label).second) throw ConfigError("duplicate target label '" + label + "'");
    c.targets.push_back(text_config(section, name, label, base_dir));
  }

  if (!tree.get_child_optional("resources")) throw ConfigError("missing [resources] section");
  const pt::ptree& res = tree.get_child("resources");
  c.grammar = existing(resolve(base_dir, required(res, "resources", "grammar")), "grammar");
  c.lexicons = existing(resolve(base_dir, required(res, "resources", "lexicons")), "lexicon directory");
  c.transfer = existing(resolve(base_dir, required(res, "resources", "transfer")), "transfer resource directory");
  if (auto v = res.get_optional<std::string>("hypertypes")) c.hypertypes = existing(resolve(base_dir, *v), "hypertypes");
  if (auto v = res.get_optional<std::string>("bilingual"))
    c.bilingual_lexicon = existing(resolve(base_dir, *v), "bilingual lexicon");
  if (auto v = res.get_optional<std::string>("function_words"))
    c.function_words = existing(resolve(base_dir, *v), "function word list");

  const pt::ptree& align = tree.get_child("align", empty);
  c.align.mean_ratio = number(align, "mean_ratio", c.align.mean_ratio);
  c.align.variance = number(align, "variance", c.align.variance);
  c.align.prior_one_one = number(align, "prior_one_one", c.align.prior_one_one);
  c.align.prior_one_two = number(align, "prior_one_two", c.align.prior_one_two);
  c.align.omission_penalty = number(align, "omission_penalty", c.align.omission_penalty);
  c.align.cognate_bonus = number(align, "cognate_bonus", c.align.cognate_bonus);
  c.align.anchor_bonus = number(align, "anchor_bonus", c.align.anchor_bonus);
  const double min_length = number(align, "min_cognate_length", static_cast<double>(c.align.min_cognate_length));
  if (min_length < 1 || min_length != static_cast<double>(static_cast<std::size_t>(min_length)))
    throw ConfigError("[align] min_cognate_length must be a positive integer");
  c.align.min_cognate_length = static_cast<std::size_t>(min_length);
  if (c.align.variance <= 0) throw ConfigError("[align] variance must be positive");

  c.theta = number(tree.get_child("classify", empty), "theta", c.theta);
  if (c.theta < 0 || c.theta > 1) throw ConfigError("[classify] theta must lie in [0, 1]");
  return c;
}

ProjectConfig load_config(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  ProjectConfig c = parse_config(buf.str(), fs::absolute(path).parent_path());
  c.config_path = fs::absolute(path).lexically_normal();
  return c;
}

}  // namespace onomast::pipeline
