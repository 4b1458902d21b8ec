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

#include "onomast/aligner/align.hpp"

#include <algorithm>
#include <limits>

#include "cost_detail.hpp"
#include "onomast/error.hpp"

namespace onomast::aligner {

namespace {

// Moves in tie-break order.
constexpr std::pair<std::size_t, std::size_t> kMoves[] = {{1, 1}, {2, 1}, {1, 2}, {1, 0}, {0, 1}};

struct SentenceFeatures {
  std::size_t chars = 0;
  std::set<std::string> cognates;
};

std::vector<SentenceFeatures> features_of(const corpus::Document& doc, std::size_t min_length) {
  std::vector<SentenceFeatures> out;
  out.reserve(doc.size());
  for (const corpus::Sentence* s : doc.sentences())
    out.push_back({s->length(), cognate_candidates(Group{s}, min_length)});
  return out;
}

std::size_t shared_count(const std::set<std::string>& a1, const std::set<std::string>* a2,
                         const std::set<std::string>& b1, const std::set<std::string>* b2) {
  std::set<std::string> a = a1;
  if (a2) a.insert(a2->begin(), a2->end());
  std::size_t n = 0;
  for (const std::string& w : a)
    if (b1.count(w) || (b2 && b2->count(w))) ++n;
  // Count each shared form once even when it occurs in both target sentences.
  return n;
}

}  // namespace

Bitext align_bitext(const corpus::Document& pivot, const corpus::Document& target, const CostParams& params) {
  if (pivot.empty()) throw EmptyDocument("pivot document has no sentences");
  if (target.empty()) throw EmptyDocument("target document has no sentences");
  const std::size_t n = pivot.size();
  const std::size_t m = target.size();
  const auto pf = features_of(pivot, params.min_cognate_length);
  const auto tf = features_of(target, params.min_cognate_length);

  auto cost_of = [&](std::size_t i, std::size_t j, std::size_t dp_, std::size_t dt) {
    LinkFeatures f;
    f.pivot_sentences = dp_;
    f.target_sentences = dt;
    if (dp_ > 0 && dt > 0) {
      for (std::size_t k = 0; k < dp_; ++k) f.pivot_chars += pf[i + k].chars;
      for (std::size_t k = 0; k < dt; ++k) f.target_chars += tf[j + k].chars;
      f.cognates = shared_count(pf[i].cognates, dp_ == 2 ? &pf[i + 1].cognates : nullptr, tf[j].cognates,
                                dt == 2 ? &tf[j + 1].cognates : nullptr);
      f.anchored = pivot.sentence(i).id().same_paragraph(target.sentence(j).id());
    }
    return combine_cost(f, params);
  };

  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> best((n + 1) * (m + 1), kInf);
  std::vector<int> move((n + 1) * (m + 1), -1);
  auto at = [m](std::size_t i, std::size_t j) { return i * (m + 1) + j; };
  best[at(0, 0)] = 0.0;
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= m; ++j) {
      if (i == 0 && j == 0) continue;
      for (int k = 0; k < 5; ++k) {
        const auto [dp_, dt] = kMoves[k];
        if (dp_ > i || dt > j) continue;
        const double prev = best[at(i - dp_, j - dt)];
        if (prev == kInf) continue;
        const double total = prev + cost_of(i - dp_, j - dt, dp_, dt);
        if (total < best[at(i, j)]) {
          best[at(i, j)] = total;
          move[at(i, j)] = k;
        }
      }
    }
  }

  Bitext bitext{pivot, target, {}};
  std::size_t i = n;
  std::size_t j = m;
  while (i > 0 || j > 0) {
    const auto [dp_, dt] = kMoves[move[at(i, j)]];
    AlignmentLink link;
    for (std::size_t k = 0; k < dp_; ++k) link.pivot.push_back(pivot.sentence(i - dp_ + k).id());
    for (std::size_t k = 0; k < dt; ++k) link.target.push_back(target.sentence(j - dt + k).id());
    link.score = cost_of(i - dp_, j - dt, dp_, dt);
    bitext.links.push_back(std::move(link));
    i -= dp_;
    j -= dt;
  }
  std::reverse(bitext.links.begin(), bitext.links.end());
  return bitext;
}

namespace {

Group group_of(const corpus::Document& doc, const std::vector<SegmentId>& ids) {
  Group g;
  for (const SegmentId& id : ids) g.push_back(&doc.sentence(*doc.index_of(id)));
  return g;
}

void require_index(const std::vector<AlignmentLink>& links, std::size_t index, const char* what) {
  if (index >= links.size())
    throw EditConflict(std::string(what) + " refers to link " + std::to_string(index) + " but only " +
                       std::to_string(links.size()) + " exist");
}

AlignmentLink fresh(std::vector<SegmentId> pivot, std::vector<SegmentId> target) {
  if (!legal_shape(pivot.size(), target.size()))
    throw InvalidEdit("edit would create an illegal " + std::to_string(pivot.size()) + ":" +
                      std::to_string(target.size()) + " link");
  AlignmentLink l;
  l.pivot = std::move(pivot);
  l.target = std::move(target);
  l.status = LinkStatus::edited;
  return l;
}

struct Applier {
  std::vector<AlignmentLink>& links;

  void operator()(const edit::Merge& e) {
    require_index(links, e.index, "merge");
    require_index(links, e.index + 1, "merge");
    auto pivot = links[e.index].pivot;
    auto target = links[e.index].target;
    pivot.insert(pivot.end(), links[e.index + 1].pivot.begin(), links[e.index + 1].pivot.end());
    target.insert(target.end(), links[e.index + 1].target.begin(), links[e.index + 1].target.end());
    links[e.index] = fresh(std::move(pivot), std::move(target));
    links.erase(links.begin() + static_cast<long>(e.index) + 1);
  }

  void operator()(const edit::Split& e) {
    require_index(links, e.index, "split");
    const AlignmentLink& l = links[e.index];
    if (e.pivot_cut > l.pivot.size() || e.target_cut > l.target.size())
      throw InvalidEdit("split point outside link " + std::to_string(e.index));
    auto pc = static_cast<long>(e.pivot_cut);
    auto tc = static_cast<long>(e.target_cut);
    AlignmentLink first = fresh({l.pivot.begin(), l.pivot.begin() + pc}, {l.target.begin(), l.target.begin() + tc});
    AlignmentLink second = fresh({l.pivot.begin() + pc, l.pivot.end()}, {l.target.begin() + tc, l.target.end()});
    links[e.index] = std::move(first);
    links.insert(links.begin() + static_cast<long>(e.index) + 1, std::move(second));
  }

  void operator()(const edit::Retype& e) {
    if (e.count == 0) throw InvalidEdit("retype needs at least one link");
    require_index(links, e.first, "retype");
    require_index(links, e.first + e.count - 1, "retype");
    std::vector<SegmentId> pivot;
    std::vector<SegmentId> target;
    for (std::size_t k = e.first; k < e.first + e.count; ++k) {
      pivot.insert(pivot.end(), links[k].pivot.begin(), links[k].pivot.end());
      target.insert(target.end(), links[k].target.begin(), links[k].target.end());
    }
    std::size_t pivot_total = 0;
    std::size_t target_total = 0;
    for (const auto& [p, t] : e.shapes) {
      pivot_total += p;
      target_total += t;
    }
    if (pivot_total != pivot.size() || target_total != target.size())
      throw InvalidEdit("retype shapes cover " + std::to_string(pivot_total) + ":" + std::to_string(target_total) +
                        " sentences, links hold " + std::to_string(pivot.size()) + ":" + std::to_string(target.size()));
    std::vector<AlignmentLink> replacement;
    std::size_t pi = 0;
    std::size_t ti = 0;
    for (const auto& [p, t] : e.shapes) {
      replacement.push_back(fresh({pivot.begin() + static_cast<long>(pi), pivot.begin() + static_cast<long>(pi + p)},
                                  {target.begin() + static_cast<long>(ti), target.begin() + static_cast<long>(ti + t)}));
      pi += p;
      ti += t;
    }
    links.erase(links.begin() + static_cast<long>(e.first), links.begin() + static_cast<long>(e.first + e.count));
    links.insert(links.begin() + static_cast<long>(e.first), replacement.begin(), replacement.end());
  }

  void operator()(const edit::Confirm& e) {
    require_index(links, e.index, "confirm");
    links[e.index].status = LinkStatus::confirmed;
  }
};

}  // namespace

Bitext apply_corrections(const Bitext& bitext, const std::vector<Edit>& edits, const CostParams& params) {
  Bitext out = bitext;
  Applier applier{out.links};
  for (const Edit& e : edits) std::visit(applier, e);
  auto violations = validate_links(out);
  if (!violations.empty()) {
    std::vector<std::string> described;
    for (const Violation& v : violations) described.push_back(v.describe());
    throw InvalidEdit("edits break the link partition", std::move(described));
  }
  for (AlignmentLink& l : out.links)
    if (l.status == LinkStatus::edited)
      l.score = link_cost(group_of(out.pivot, l.pivot), group_of(out.target, l.target), params);
  return out;
}

}  // namespace onomast::aligner
