// Copyright 2026 The coursediff Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace coursediff {

/// Broad failure classes. The CLI maps these to exit codes:
/// kValidation and kDomain -> 1, kParse and kIo -> 2.
enum class ErrorCategory { kValidation, kDomain, kParse, kIo };

enum class ErrorCode {
  kInvalidCriterion,
  kUnresolvedCriterion,
  kEmptyCriteria,
  kInvalidOverride,
  kInvalidGrade,
  kInsufficientData,
  kNoActionWords,
  kDuplicateId,
  kLevelOutOfRange,
  kInvalidLexicon,
  kInvalidArgument,
  kParse,
  kIo,
};

inline ErrorCategory CategoryOf(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse:
      return ErrorCategory::kParse;
    case ErrorCode::kIo:
      return ErrorCategory::kIo;
    case ErrorCode::kInsufficientData:
    case ErrorCode::kNoActionWords:
      return ErrorCategory::kDomain;
    default:
      return ErrorCategory::kValidation;
  }
}

inline const char* CodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidCriterion: return "invalid-criterion";
    case ErrorCode::kUnresolvedCriterion: return "unresolved-criterion";
    case ErrorCode::kEmptyCriteria: return "empty-criteria";
    case ErrorCode::kInvalidOverride: return "invalid-override";
    case ErrorCode::kInvalidGrade: return "invalid-grade";
    case ErrorCode::kInsufficientData: return "insufficient-data";
    case ErrorCode::kNoActionWords: return "no-action-words";
    case ErrorCode::kDuplicateId: return "duplicate-id";
    case ErrorCode::kLevelOutOfRange: return "level-out-of-range";
    case ErrorCode::kInvalidLexicon: return "invalid-lexicon";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kParse: return "parse-error";
    case ErrorCode::kIo: return "io-error";
  }
  return "error";
}

/// The single exception type thrown by the library. what() is prefixed with
/// the code name, e.g. "unresolved-criterion: course C1: unknown id 'z'".
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(CodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  ErrorCategory category() const noexcept { return CategoryOf(code_); }

 private:
  ErrorCode code_;
};

}  // namespace coursediff
