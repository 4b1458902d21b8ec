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

#include "onomast/reporting/report.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <tuple>

#include "json.hpp"
#include "onomast/error.hpp"

namespace onomast::reporting {

using cascade::Hypertype;
using cascade::kHypertypes;
using transfer::kProcedureLabels;
using transfer::ProcedureLabel;

namespace {

std::size_t index_of(Hypertype h) { return static_cast<std::size_t>(h); }
std::size_t index_of(ProcedureLabel l) { return static_cast<std::size_t>(l); }

// Annotations in document order, whatever order they are stored in.
std::vector<const cascade::EntityAnnotation*> ordered(const cascade::AnnotatedDocument& doc) {
  std::vector<const cascade::EntityAnnotation*> out;
  for (const cascade::EntityAnnotation& a : doc.annotations) out.push_back(&a);
  std::stable_sort(out.begin(), out.end(), [](const auto* a, const auto* b) {
    return std::tie(a->segment, a->begin) < std::tie(b->segment, b->begin);
  });
  return out;
}

}  // namespace

InventoryTable np_inventory(const cascade::AnnotatedDocument& pivot) {
  InventoryTable t;
  std::array<std::set<std::string>, 4> seen;
  for (const cascade::EntityAnnotation& a : pivot.annotations) {
    const std::size_t h = index_of(a.type.hypertype);
    ++t.rows[h].occurrences_total;
    seen[h].insert(a.surface);
  }
  for (std::size_t h = 0; h < 4; ++h) {
    t.rows[h].occurrences_distinct = seen[h].size();
    t.total.occurrences_total += t.rows[h].occurrences_total;
    t.total.occurrences_distinct += t.rows[h].occurrences_distinct;
  }
  return t;
}

double FrequencySample::coverage_share() const {
  return total_occurrences == 0 ? 0.0 : static_cast<double>(covered_occurrences) / static_cast<double>(total_occurrences);
}

std::size_t sample_size(std::size_t distinct, double fraction) {
  if (distinct == 0) return 0;
  const auto n = static_cast<std::size_t>(std::floor(fraction * static_cast<double>(distinct) + 1e-9));
  return std::clamp<std::size_t>(n, 1, distinct);
}

FrequencySample top_frequency_sample(const cascade::AnnotatedDocument& pivot, double fraction) {
  struct Entry {
    std::string surface;
    std::size_t count = 0;
    std::size_t first = 0;
  };
  std::array<std::vector<Entry>, 4> names;
  std::array<std::map<std::string, std::size_t>, 4> where;
  FrequencySample out;
  std::size_t position = 0;
  for (const cascade::EntityAnnotation* a : ordered(pivot)) {
    const std::size_t h = index_of(a->type.hypertype);
    auto [it, fresh] = where[h].try_emplace(a->surface, names[h].size());
    if (fresh) names[h].push_back({a->surface, 0, position});
    ++names[h][it->second].count;
    ++position;
    ++out.total_occurrences;
  }
  for (std::size_t h = 0; h < 4; ++h) {
    auto& list = names[h];
    std::stable_sort(list.begin(), list.end(), [](const Entry& a, const Entry& b) {
      if (a.count != b.count) return a.count > b.count;
      return a.first < b.first;
    });
    const std::size_t k = sample_size(list.size(), fraction);
    for (std::size_t i = 0; i < k; ++i) {
      out.selected[h].push_back({list[i].surface, list[i].count});
      out.covered_occurrences += list[i].count;
    }
  }
  return out;
}

double MatrixRow::percent(ProcedureLabel l) const {
  return total == 0 ? 0.0 : 100.0 * static_cast<double>(counts[index_of(l)]) / static_cast<double>(total);
}

namespace {

// Largest-remainder rounding of counts/total to tenths of a percent.
std::array<int, 5> round_tenths(const std::array<std::size_t, 5>& counts, std::size_t total) {
  std::array<int, 5> out{};
  if (total == 0) return out;
  std::array<std::size_t, 5> remainder{};
  std::size_t assigned = 0;
  for (std::size_t i = 0; i < 5; ++i) {
    const std::size_t scaled = counts[i] * 1000;
    out[i] = static_cast<int>(scaled / total);
    remainder[i] = scaled % total;
    assigned += static_cast<std::size_t>(out[i]);
  }
  std::array<std::size_t, 5> order{0, 1, 2, 3, 4};
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return remainder[a] > remainder[b]; });
  for (std::size_t k = 0; assigned < 1000; ++k, ++assigned) ++out[order[k]];
  return out;
}

}  // namespace

ProcedureMatrix procedure_matrix(const std::vector<transfer::NamePair>& pairs) {
  ProcedureMatrix m;
  for (const transfer::NamePair& p : pairs) {
    if (!p.label) throw Unlabeled("name pair " + p.id() + " (" + p.target_lang + ") has no label");
    auto row = std::find_if(m.rows.begin(), m.rows.end(), [&](const MatrixRow& r) { return r.lang == p.target_lang; });
    if (row == m.rows.end()) {
      m.rows.push_back({p.target_lang, {}, 0, {}});
      row = m.rows.end() - 1;
    }
    ++row->counts[index_of(*p.label)];
    ++row->total;
  }
  for (MatrixRow& r : m.rows) r.tenths = round_tenths(r.counts, r.total);
  return m;
}

namespace {

std::string tenths_text(int t) { return std::to_string(t / 10) + "." + std::to_string(t % 10); }

std::string percent_text(double share) {
  const long t = std::lround(share * 1000.0);
  return std::to_string(t / 10) + "." + std::to_string(t % 10);
}

bool has_names(const InventoryTable& t) { return t.total.occurrences_total > 0; }

std::string markdown(const Report& r) {
  std::string out;
  if (r.inventory) {
    out += "## Proper names by hypertype\n\n| Hypertype | Occurrences | Distinct |\n|---|---:|---:|\n";
    if (has_names(*r.inventory)) {
      for (Hypertype h : kHypertypes)
        out += std::string("| ") + cascade::hypertype_name(h) + " | " +
               std::to_string((*r.inventory)[h].occurrences_total) + " | " +
               std::to_string((*r.inventory)[h].occurrences_distinct) + " |\n";
      out += "| total | " + std::to_string(r.inventory->total.occurrences_total) + " | " +
             std::to_string(r.inventory->total.occurrences_distinct) + " |\n";
    }
    out += "\n";
  }
  if (r.sample) {
    out += "## Most frequent names\n\n| Hypertype | Name | Occurrences |\n|---|---|---:|\n";
    for (Hypertype h : kHypertypes)
      for (const SampledName& n : r.sample->selected[index_of(h)])
        out += std::string("| ") + cascade::hypertype_name(h) + " | " + n.surface + " | " +
               std::to_string(n.occurrences) + " |\n";
    out += "\nCovered occurrences: " + std::to_string(r.sample->covered_occurrences) + " / " +
           std::to_string(r.sample->total_occurrences) + " (" + percent_text(r.sample->coverage_share()) + "%)\n\n";
  }
  if (r.matrix) {
    out += "## Translation procedures (%)\n\n";
    if (!r.basis.empty()) out += "Basis: " + r.basis + "\n\n";
    out += "| Language |";
    for (ProcedureLabel l : kProcedureLabels) out += std::string(" ") + transfer::label_name(l) + " |";
    out += " Pairs |\n|---|---:|---:|---:|---:|---:|---:|\n";
    for (const MatrixRow& row : r.matrix->rows) {
      out += "| " + row.lang + " |";
      for (int t : row.tenths) out += " " + tenths_text(t) + " |";
      out += " " + std::to_string(row.total) + " |\n";
    }
  }
  return out;
}

std::string tsv(const Report& r) {
  std::string out;
  if (r.inventory) {
    out += "hypertype\toccurrences\tdistinct\n";
    if (has_names(*r.inventory)) {
      for (Hypertype h : kHypertypes)
        out += std::string(cascade::hypertype_name(h)) + "\t" + std::to_string((*r.inventory)[h].occurrences_total) +
               "\t" + std::to_string((*r.inventory)[h].occurrences_distinct) + "\n";
      out += "total\t" + std::to_string(r.inventory->total.occurrences_total) + "\t" +
             std::to_string(r.inventory->total.occurrences_distinct) + "\n";
    }
    out += "\n";
  }
  if (r.sample) {
    out += "hypertype\tname\toccurrences\n";
    for (Hypertype h : kHypertypes)
      for (const SampledName& n : r.sample->selected[index_of(h)])
        out += std::string(cascade::hypertype_name(h)) + "\t" + n.surface + "\t" + std::to_string(n.occurrences) + "\n";
    out += "\n";
  }
  if (r.matrix) {
    out += "lang";
    for (ProcedureLabel l : kProcedureLabels) out += std::string("\t") + transfer::label_name(l);
    out += "\tpairs\n";
    for (const MatrixRow& row : r.matrix->rows) {
      out += row.lang;
      for (int t : row.tenths) out += "\t" + tenths_text(t);
      out += "\t" + std::to_string(row.total) + "\n";
    }
  }
  return out;
}

nlohmann::ordered_json inventory_json(const InventoryTable& t) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (Hypertype h : kHypertypes)
    j[cascade::hypertype_name(h)] = {{"total", t[h].occurrences_total}, {"distinct", t[h].occurrences_distinct}};
  j["total"] = {{"total", t.total.occurrences_total}, {"distinct", t.total.occurrences_distinct}};
  return j;
}

nlohmann::ordered_json matrix_json(const ProcedureMatrix& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const MatrixRow& r : m.rows) {
    nlohmann::ordered_json counts = nlohmann::ordered_json::object();
    nlohmann::ordered_json percent = nlohmann::ordered_json::object();
    for (ProcedureLabel l : kProcedureLabels) {
      counts[transfer::label_name(l)] = r.counts[index_of(l)];
      percent[transfer::label_name(l)] = static_cast<double>(r.tenths[index_of(l)]) / 10.0;
    }
    rows.push_back({{"lang", r.lang}, {"pairs", r.total}, {"counts", counts}, {"percent", percent}});
  }
  return {{"rows", rows}};
}

std::string json(const Report& r) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  if (r.inventory) j["inventory"] = inventory_json(*r.inventory);
  if (r.sample) {
    nlohmann::ordered_json s = nlohmann::ordered_json::object();
    for (Hypertype h : kHypertypes) {
      nlohmann::ordered_json list = nlohmann::ordered_json::array();
      for (const SampledName& n : r.sample->selected[index_of(h)])
        list.push_back({{"surface", n.surface}, {"occurrences", n.occurrences}});
      s[cascade::hypertype_name(h)] = list;
    }
    j["sample"] = {{"selected", s},
                   {"covered_occurrences", r.sample->covered_occurrences},
                   {"total_occurrences", r.sample->total_occurrences}};
  }
  if (r.matrix) {
    j["matrix"] = matrix_json(*r.matrix);
    j["basis"] = r.basis;
  }
  return j.dump(2) + "\n";
}

nlohmann::json parse_json(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), 0);
  }
}

}  // namespace

std::string emit_report(const Report& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::tsv: return tsv(report);
    case ReportFormat::markdown: return markdown(report);
    case ReportFormat::json: return json(report);
  }
  return {};
}

ProcedureMatrix matrix_from_json(std::string_view text) {
  const nlohmann::json j = parse_json(text);
  const nlohmann::json& m = j.contains("matrix") ? j["matrix"] : j;
  ProcedureMatrix out;
  try {
    for (const auto& row : m.at("rows")) {
      MatrixRow r;
      r.lang = row.at("lang").get<std::string>();
      r.total = row.at("pairs").get<std::size_t>();
      for (ProcedureLabel l : kProcedureLabels) {
        r.counts[index_of(l)] = row.at("counts").at(transfer::label_name(l)).get<std::size_t>();
        r.tenths[index_of(l)] =
            static_cast<int>(std::lround(row.at("percent").at(transfer::label_name(l)).get<double>() * 10.0));
      }
      out.rows.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad matrix json: ") + e.what(), 0);
  }
  return out;
}

InventoryTable inventory_from_json(std::string_view text) {
  const nlohmann::json j = parse_json(text);
  const nlohmann::json& inv = j.contains("inventory") ? j["inventory"] : j;
  InventoryTable t;
  try {
    for (Hypertype h : kHypertypes) {
      t.rows[index_of(h)].occurrences_total = inv.at(cascade::hypertype_name(h)).at("total").get<std::size_t>();
      t.rows[index_of(h)].occurrences_distinct = inv.at(cascade::hypertype_name(h)).at("distinct").get<std::size_t>();
    }
    t.total.occurrences_total = inv.at("total").at("total").get<std::size_t>();
    t.total.occurrences_distinct = inv.at("total").at("distinct").get<std::size_t>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad inventory json: ") + e.what(), 0);
  }
  return t;
}

}  // namespace onomast::reporting
