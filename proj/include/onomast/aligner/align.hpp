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

#ifndef ONOMAST_ALIGNER_ALIGN_HPP_
#define ONOMAST_ALIGNER_ALIGN_HPP_

#include <variant>
#include <vector>

#include "onomast/aligner/bitext.hpp"
#include "onomast/aligner/cost.hpp"

namespace onomast::aligner {

// Minimum-cost monotone link sequence by dynamic programming over sentence
// prefixes. Ties prefer 1:1, then 2:1, 1:2, 1:0, 0:1. Throws EmptyDocument.
Bitext align_bitext(const corpus::Document& pivot, const corpus::Document& target, const CostParams& params);

// Manual corrections. Link indices refer to the link list as it stands when
// the edit is applied; edits apply in order.
namespace edit {
// Joins links `index` and `index + 1`.
struct Merge {
  std::size_t index;
};
// Cuts link `index` after `pivot_cut` pivot and `target_cut` target
// sentences: 2:1 with (1, 1) gives 1:1 + 1:0.
struct Split {
  std::size_t index;
  std::size_t pivot_cut;
  std::size_t target_cut;
};
// Replaces `count` links from `first` by links of the given shapes covering
// the same sentences in order.
struct Retype {
  std::size_t first;
  std::size_t count;
  std::vector<std::pair<std::size_t, std::size_t>> shapes;
};
struct Confirm {
  std::size_t index;
};
}  // namespace edit

using Edit = std::variant<edit::Merge, edit::Split, edit::Retype, edit::Confirm>;

// All-or-nothing: throws EditConflict for an index that does not exist and
// InvalidEdit when an edit produces an illegal shape or the result fails
// validate_links. Changed links get status `edited` and a fresh score.
Bitext apply_corrections(const Bitext& bitext, const std::vector<Edit>& edits, const CostParams& params);

}  // namespace onomast::aligner

#endif  // ONOMAST_ALIGNER_ALIGN_HPP_
