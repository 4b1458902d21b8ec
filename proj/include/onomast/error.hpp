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

#ifndef ONOMAST_ERROR_HPP_
#define ONOMAST_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <vector>

namespace onomast {

// Base of every error the library throws. `kind()` is the stable name used
// in CLI diagnostics and review API payloads.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define ONOMAST_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                        \
   public:                                                           \
    explicit Name(const std::string& message) : Error(#Name, message) {} \
  };

// corpus
ONOMAST_DEFINE_ERROR(EmptyText)
ONOMAST_DEFINE_ERROR(IdError)
ONOMAST_DEFINE_ERROR(EncodingError)
ONOMAST_DEFINE_ERROR(ConfigError)
// cascade
ONOMAST_DEFINE_ERROR(LexiconError)
// aligner
ONOMAST_DEFINE_ERROR(LinkShapeError)
ONOMAST_DEFINE_ERROR(EmptyDocument)
ONOMAST_DEFINE_ERROR(EditConflict)
// multitext
ONOMAST_DEFINE_ERROR(PivotMismatch)
ONOMAST_DEFINE_ERROR(QueryError)
// reporting
ONOMAST_DEFINE_ERROR(Unlabeled)
// pipeline
ONOMAST_DEFINE_ERROR(StageOrderError)
ONOMAST_DEFINE_ERROR(StaleArtifact)

#undef ONOMAST_DEFINE_ERROR

// Malformed input with a position. `line` and `column` are 1-based; 0 means
// unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column = 0)
      : Error("ParseError", message + " (line " + std::to_string(line) +
                                (column > 0 ? ", column " + std::to_string(column) : "") + ")"),
        line_(line),
        column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

class GrammarError : public Error {
 public:
  GrammarError(const std::string& message, int line, int column)
      : Error("GrammarError", message + " (line " + std::to_string(line) + ", column " +
                                  std::to_string(column) + ")"),
        line_(line),
        column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

// Errors that carry a list of human-readable violations.
class ViolationError : public Error {
 public:
  ViolationError(std::string kind, const std::string& message, std::vector<std::string> violations)
      : Error(std::move(kind), message), violations_(std::move(violations)) {}
  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  std::vector<std::string> violations_;
};

class InvalidEdit : public ViolationError {
 public:
  InvalidEdit(const std::string& message, std::vector<std::string> violations = {})
      : ViolationError("InvalidEdit", message, std::move(violations)) {}
};

class InvalidBitext : public ViolationError {
 public:
  InvalidBitext(const std::string& message, std::vector<std::string> violations = {})
      : ViolationError("InvalidBitext", message, std::move(violations)) {}
};

}  // namespace onomast

#endif  // ONOMAST_ERROR_HPP_
