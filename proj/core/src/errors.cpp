// Copyright 2026 The pa Authors
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

#include "pa/errors.hpp"

#include <utility>

namespace pa {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kIdenticalComponents: return "IdenticalComponents";
    case ErrorKind::kExpressionTooLarge: return "ExpressionTooLarge";
    case ErrorKind::kTooManyHyperplanes: return "TooManyHyperplanes";
    case ErrorKind::kInternalInconsistency: return "InternalInconsistency";
    case ErrorKind::kNotAComponent: return "NotAComponent";
    case ErrorKind::kBadRadii: return "BadRadii";
    case ErrorKind::kNotNonnegative: return "NotNonnegative";
    case ErrorKind::kGridTooLarge: return "GridTooLarge";
    case ErrorKind::kBadStep: return "BadStep";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kMalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, std::string detail)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + detail),
      kind_(kind),
      detail_(std::move(detail)) {}

void require_same_dim(std::size_t lhs, std::size_t rhs, std::string_view what) {
  if (lhs != rhs) {
    throw Error(ErrorKind::kDimensionMismatch,
                std::string(what) + ": " + std::to_string(lhs) + " vs " +
                    std::to_string(rhs));
  }
}

}  // namespace pa
