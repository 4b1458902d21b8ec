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

#ifndef ONOMAST_ALIGNER_COST_HPP_
#define ONOMAST_ALIGNER_COST_HPP_

#include <set>
#include <string>
#include <vector>

#include "onomast/corpus/document.hpp"

namespace onomast::aligner {

// Every constant of the link cost. Defaults: Gale-Church length model
// (c = 1, s^2 = 6.8) and priors close to -ln of the Gale-Church shape
// probabilities.
struct CostParams {
  double mean_ratio = 1.0;
  double variance = 6.8;
  double prior_one_one = 0.0;
  double prior_one_two = 2.3;  // also 2:1
  double omission_penalty = 6.9;  // 1:0 and 0:1
  double cognate_bonus = 1.0;  // per shared cognate
  double anchor_bonus = 0.5;   // leading ids share (d, p)
  std::size_t min_cognate_length = 4;
};

using Group = std::vector<const corpus::Sentence*>;

// Folded word tokens of length >= min_length (numbers of any length) that
// occur on both sides.
std::set<std::string> detect_cognates(const Group& pivot, const Group& target, std::size_t min_length);
std::set<std::string> detect_cognates(const corpus::Sentence& pivot, const corpus::Sentence& target,
                                      std::size_t min_length);

// -ln P(|delta| >= observed) for delta = (target - pivot * c) / sqrt(pivot * s^2).
double length_cost(std::size_t pivot_chars, std::size_t target_chars, const CostParams& params);

// kind prior + length term - cognate bonus * |cognates| - anchor bonus.
// Omissions cost exactly the omission penalty. Bonuses can push the result
// below zero. Throws LinkShapeError for illegal group shapes.
double link_cost(const Group& pivot, const Group& target, const CostParams& params);

}  // namespace onomast::aligner

#endif  // ONOMAST_ALIGNER_COST_HPP_
