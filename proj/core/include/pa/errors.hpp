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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pa {

enum class ErrorKind {
  kDimensionMismatch,
  kIdenticalComponents,
  kExpressionTooLarge,
  kTooManyHyperplanes,
  kInternalInconsistency,
  kNotAComponent,
  kBadRadii,
  kNotNonnegative,
  kGridTooLarge,
  kBadStep,
  kInvalidArgument,
  kMalformedInput,
};

// Stable identifier used in structured error output, e.g. "DimensionMismatch".
std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string detail);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

// Throws kDimensionMismatch unless lhs == rhs.
void require_same_dim(std::size_t lhs, std::size_t rhs, std::string_view what);

}  // namespace pa
