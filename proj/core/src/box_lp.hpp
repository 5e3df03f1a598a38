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

#include <optional>
#include <span>
#include <vector>

#include "pa/affine.hpp"

namespace pa::detail {

// Axis-aligned rectangle lo <= x <= hi (not necessarily a cube).
struct Bounds {
  std::vector<Rational> lo;
  std::vector<Rational> hi;

  static Bounds of(const SolidBox& box);
  std::size_t dim() const { return lo.size(); }
};

struct Optimum {
  Rational value;
  Point x;
};

// max objective(x) over { x in bounds : g(x) >= 0 for every g in constraints }.
// std::nullopt when that set is empty. The region is compact, so the maximum
// is always attained.
std::optional<Optimum> maximize(const AffineFunction& objective,
                                std::span<const AffineFunction> constraints,
                                const Bounds& bounds);

std::optional<Optimum> minimize(const AffineFunction& objective,
                                std::span<const AffineFunction> constraints,
                                const Bounds& bounds);

}  // namespace pa::detail
