// Copyright 2026 The divbound Authors.
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

#include "divbound/error.hpp"

namespace divbound {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonPositiveEntry: return "NonPositiveEntry";
    case ErrorCode::kSumMismatch: return "SumMismatch";
    case ErrorCode::kTooShort: return "TooShort";
    case ErrorCode::kNonFinite: return "NonFinite";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kNonFiniteResult: return "NonFiniteResult";
    case ErrorCode::kBadDimension: return "BadDimension";
    case ErrorCode::kBadParameter: return "BadParameter";
    case ErrorCode::kInvalidRange: return "InvalidRange";
    case ErrorCode::kUnsupportedRegime: return "UnsupportedRegime";
    case ErrorCode::kUnknownChain: return "UnknownChain";
    case ErrorCode::kMalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

}  // namespace divbound
