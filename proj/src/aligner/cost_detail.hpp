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

#ifndef ONOMAST_SRC_ALIGNER_COST_DETAIL_HPP_
#define ONOMAST_SRC_ALIGNER_COST_DETAIL_HPP_

#include <set>
#include <string>

#include "onomast/aligner/cost.hpp"

namespace onomast::aligner {

// Integer features of a candidate link; the cost is a pure function of
// these, so cached and direct evaluation agree bit for bit.
struct LinkFeatures {
  std::size_t pivot_sentences = 0;
  std::size_t target_sentences = 0;
  std::size_t pivot_chars = 0;
  std::size_t target_chars = 0;
  std::size_t cognates = 0;
  bool anchored = false;
};

double combine_cost(const LinkFeatures& features, const CostParams& params);

// Folded cognate candidates of a group's tokens.
std::set<std::string> cognate_candidates(const Group& group, std::size_t min_length);

}  // namespace onomast::aligner

#endif  // ONOMAST_SRC_ALIGNER_COST_DETAIL_HPP_
