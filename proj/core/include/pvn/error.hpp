// Copyright 2026 The pvn Authors.
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

#ifndef PVN_ERROR_HPP_
#define PVN_ERROR_HPP_

#include <cstddef>
#include <exception>
#include <optional>
#include <string>
#include <utility>

namespace pvn {

enum class ErrorCode {
  kDuplicateName,
  kInvalidName,
  kUnknownGroup,
  kUnknownMember,
  kUnknownPath,
  kCycleDetected,
  kCrossHierarchy,
  kCannotModifyAll,
  kDuplicateSiblingName,
  kCannotRemoveRoot,
  kForeignContent,
  kForeignSubjectHierarchy,
  kNotFound,
  kPathLimitExceeded,
  kSyntaxError,
  kUnknownName,
  kDuplicateDeclaration,
  kNotAQuery,
  kIoError,
};

// Position in a policy-language source text, 1-based. line == 0 means "no
// location attached".
struct SourceLoc {
  int line = 0;
  int column = 0;
};

class Error : public std::exception {
 public:
  Error(ErrorCode code, std::string message)
      : code_(code), message_(std::move(message)) {}
  Error(ErrorCode code, std::string message, SourceLoc loc)
      : code_(code), message_(std::move(message)), loc_(loc) {}

  ErrorCode code() const { return code_; }
  const std::string& message() const { return message_; }
  const std::optional<SourceLoc>& location() const { return loc_; }
  const char* what() const noexcept override { return message_.c_str(); }

  Error with_location(SourceLoc loc) const {
    Error e = *this;
    e.loc_ = loc;
    return e;
  }

 private:
  ErrorCode code_;
  std::string message_;
  std::optional<SourceLoc> loc_;
};

// Failure of one mutation inside an atomic batch. `index` is the 0-based
// position of the failing mutation; the caller's snapshot is untouched. The
// message names the mutation 1-based for humans.
class BatchError : public Error {
 public:
  BatchError(std::size_t index, const Error& cause)
      : Error(cause.code(), "mutation #" + std::to_string(index + 1) + ": " +
                                cause.message()),
        index_(index),
        inner_message_(cause.message()) {}

  std::size_t index() const { return index_; }
  const std::string& inner_message() const { return inner_message_; }

 private:
  std::size_t index_;
  std::string inner_message_;
};

}  // namespace pvn

#endif  // PVN_ERROR_HPP_
