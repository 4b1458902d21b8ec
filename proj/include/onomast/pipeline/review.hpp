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

#ifndef ONOMAST_PIPELINE_REVIEW_HPP_
#define ONOMAST_PIPELINE_REVIEW_HPP_

#include <filesystem>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>

#include "onomast/pipeline/config.hpp"

namespace onomast::pipeline {

struct Response {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

// The review API over a workspace, independent of any transport. Reads run
// concurrently; writes are serialized and checked against the bitext
// revision.
class ReviewService {
 public:
  ReviewService(ProjectConfig config, std::optional<std::filesystem::path> ui_dir = std::nullopt);

  Response handle(const std::string& method, const std::string& path, const std::string& body);

 private:
  Response get_project();
  Response get_bitext(const std::string& label);
  Response post_edits(const std::string& label, const std::string& body);
  Response get_pairs(const std::string& label);
  Response post_override(const std::string& label, const std::string& body);
  Response post_approve(const std::string& label, const std::string& body);
  Response get_static(const std::string& path);

  ProjectConfig config_;
  std::optional<std::filesystem::path> ui_dir_;
  std::shared_mutex mutex_;
};

}  // namespace onomast::pipeline

#endif  // ONOMAST_PIPELINE_REVIEW_HPP_
