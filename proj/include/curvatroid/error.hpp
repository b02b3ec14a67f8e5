// Copyright 2026 The Authors.
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
#include <string_view>

namespace curvatroid {

enum class ErrorCode {
  kEmptyBasisFamily,
  kRankMismatch,
  kDegenerateGraph,
  kInvalidSpec,
  kUnknownElement,
  kNotABasis,
  kElementNotInBasis,
  kNotAdjacent,
  kInvalidRank,
  kUnbalancedMarginals,
  kUnknownCatalogKey,
  kParseError,
  kUnknownType,
  kBadRational,
  kInvalidBasisArgument,
  kTooLarge,
};

inline std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyBasisFamily: return "EmptyBasisFamily";
    case ErrorCode::kRankMismatch: return "RankMismatch";
    case ErrorCode::kDegenerateGraph: return "DegenerateGraph";
    case ErrorCode::kInvalidSpec: return "InvalidSpec";
    case ErrorCode::kUnknownElement: return "UnknownElement";
    case ErrorCode::kNotABasis: return "NotABasis";
    case ErrorCode::kElementNotInBasis: return "ElementNotInBasis";
    case ErrorCode::kNotAdjacent: return "NotAdjacent";
    case ErrorCode::kInvalidRank: return "InvalidRank";
    case ErrorCode::kUnbalancedMarginals: return "UnbalancedMarginals";
    case ErrorCode::kUnknownCatalogKey: return "UnknownCatalogKey";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kUnknownType: return "UnknownType";
    case ErrorCode::kBadRational: return "BadRational";
    case ErrorCode::kInvalidBasisArgument: return "InvalidBasisArgument";
    case ErrorCode::kTooLarge: return "TooLarge";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Outcome of a check whose failure is a value rather than an exception.
struct ValidationResult {
  bool passed = true;
  std::string detail;

  static ValidationResult pass() { return {}; }
  static ValidationResult fail(std::string why) { return {false, std::move(why)}; }

  explicit operator bool() const noexcept { return passed; }
};

}  // namespace curvatroid
