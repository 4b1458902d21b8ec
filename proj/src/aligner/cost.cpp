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

#include "onomast/aligner/cost.hpp"

#include <cmath>
#include <numbers>

#include "onomast/aligner/bitext.hpp"
#include "cost_detail.hpp"
#include "onomast/error.hpp"

namespace onomast::aligner {

std::set<std::string> cognate_candidates(const Group& group, std::size_t min_length) {
  std::set<std::string> out;
  for (const corpus::Sentence* s : group) {
    for (std::size_t i = 0; i < s->tokens().size(); ++i) {
      const corpus::Token& t = s->tokens()[i];
      if (t.kind == corpus::TokenKind::number || (t.kind == corpus::TokenKind::word && t.length >= min_length))
        out.insert(text::fold(s->token_text(i)));
    }
  }
  return out;
}

namespace {

std::size_t group_chars(const Group& group) {
  std::size_t n = 0;
  for (const corpus::Sentence* s : group) n += s->length();
  return n;
}

// log(erfc(x)) for x >= 0, stable far into the tail.
double log_erfc(double x) {
  const double direct = std::erfc(x);
  if (direct > 1e-300) return std::log(direct);
  // Asymptotic expansion: erfc(x) ~ exp(-x^2) / (x sqrt(pi)) (1 - 1/(2x^2)).
  return -x * x - std::log(x * std::sqrt(std::numbers::pi)) + std::log1p(-0.5 / (x * x));
}

}  // namespace

std::set<std::string> detect_cognates(const Group& pivot, const Group& target, std::size_t min_length) {
  const auto a = cognate_candidates(pivot, min_length);
  const auto b = cognate_candidates(target, min_length);
  std::set<std::string> shared;
  for (const std::string& w : a)
    if (b.count(w)) shared.insert(w);
  return shared;
}

std::set<std::string> detect_cognates(const corpus::Sentence& pivot, const corpus::Sentence& target,
                                      std::size_t min_length) {
  return detect_cognates(Group{&pivot}, Group{&target}, min_length);
}

double length_cost(std::size_t pivot_chars, std::size_t target_chars, const CostParams& params) {
  const double l1 = static_cast<double>(std::max<std::size_t>(pivot_chars, 1));
  const double l2 = static_cast<double>(target_chars);
  const double delta = (l2 - l1 * params.mean_ratio) / std::sqrt(l1 * params.variance);
  // P(|Z| >= |delta|) = erfc(|delta| / sqrt 2)
  return -log_erfc(std::abs(delta) / std::numbers::sqrt2);
}

double combine_cost(const LinkFeatures& f, const CostParams& params) {
  if (f.pivot_sentences == 0 || f.target_sentences == 0) return params.omission_penalty;
  const double prior = f.pivot_sentences == 1 && f.target_sentences == 1 ? params.prior_one_one : params.prior_one_two;
  double cost = prior + length_cost(f.pivot_chars, f.target_chars, params);
  cost -= params.cognate_bonus * static_cast<double>(f.cognates);
  if (f.anchored) cost -= params.anchor_bonus;
  return cost;
}

double link_cost(const Group& pivot, const Group& target, const CostParams& params) {
  if (!legal_shape(pivot.size(), target.size()))
    throw LinkShapeError("illegal group shape " + std::to_string(pivot.size()) + ":" + std::to_string(target.size()));
  LinkFeatures f;
  f.pivot_sentences = pivot.size();
  f.target_sentences = target.size();
  if (!pivot.empty() && !target.empty()) {
    f.pivot_chars = group_chars(pivot);
    f.target_chars = group_chars(target);
    f.cognates = detect_cognates(pivot, target, params.min_cognate_length).size();
    f.anchored = pivot.front()->id().same_paragraph(target.front()->id());
  }
  return combine_cost(f, params);
}

}  // namespace onomast::aligner
