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

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "pa/rational.hpp"

namespace pa {

// A point of R^m. The ambient dimension is fixed per computation.
using Point = std::vector<Rational>;

// x -> <v, x> + b.
struct AffineFunction {
  std::vector<Rational> v;
  Rational b;

  static AffineFunction constant(std::size_t dim, Rational value);
  // coef * x_i + offset
  static AffineFunction coordinate(std::size_t dim, std::size_t i, Rational coef = 1,
                                   Rational offset = 0);

  std::size_t dim() const { return v.size(); }
  bool is_constant() const;
  bool is_zero() const { return is_constant() && b.is_zero(); }

  AffineFunction& operator+=(const AffineFunction& rhs);
  AffineFunction& operator-=(const AffineFunction& rhs);
  AffineFunction& operator*=(const Rational& factor);
  friend AffineFunction operator+(AffineFunction lhs, const AffineFunction& rhs) {
    return lhs += rhs;
  }
  friend AffineFunction operator-(AffineFunction lhs, const AffineFunction& rhs) {
    return lhs -= rhs;
  }
  friend AffineFunction operator*(AffineFunction f, const Rational& factor) {
    return f *= factor;
  }
  AffineFunction operator-() const;

  // Lexicographic on (v, b); gives a deterministic canonical order.
  friend bool operator==(const AffineFunction&, const AffineFunction&) = default;
  friend auto operator<=>(const AffineFunction&, const AffineFunction&) = default;
};

Rational eval_affine(const AffineFunction& f, const Point& x);

// True iff f and g are the same function on R^m.
bool affine_equal(const AffineFunction& f, const AffineFunction& g);

// {g = 0} for an affine g with nonzero gradient.
class Hyperplane {
 public:
  explicit Hyperplane(AffineFunction g);

  const AffineFunction& g() const { return g_; }
  std::size_t dim() const { return g_.dim(); }

  // Same zero set, scaled so the first nonzero gradient entry is exactly 1.
  Hyperplane normalized() const;

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
  friend auto operator<=>(const Hyperplane&, const Hyperplane&) = default;

 private:
  AffineFunction g_;
};

// {f_i = f_j}. std::nullopt means the agreement set is empty (f_i - f_j is a
// nonzero constant). Throws kIdenticalComponents when f_i == f_j.
std::optional<Hyperplane> difference_hyperplane(const AffineFunction& f_i,
                                                const AffineFunction& f_j);

// Closed L-infinity ball center + radius * B_inf^m with radius > 0.
class SolidBox {
 public:
  SolidBox(Point center, Rational radius);

  // Omega_n = n * B_inf^m.
  static SolidBox omega(std::size_t dim, Rational n);

  const Point& center() const { return center_; }
  const Rational& radius() const { return radius_; }
  std::size_t dim() const { return center_.size(); }
  Rational lower(std::size_t i) const { return center_[i] - radius_; }
  Rational upper(std::size_t i) const { return center_[i] + radius_; }

  bool contains(const Point& x) const;
  bool interior_contains(const Point& x) const;
  bool contains(const SolidBox& inner) const;
  // Closed boxes share at least one point.
  bool intersects(const SolidBox& other) const;

  friend bool operator==(const SolidBox&, const SolidBox&) = default;

 private:
  Point center_;
  Rational radius_;
};

// Exact extrema of an affine function over a closed box.
Rational min_over_box(const AffineFunction& f, const SolidBox& box);
Rational max_over_box(const AffineFunction& f, const SolidBox& box);

// The 2m strict inequalities g > 0 cutting out the open interior of `box`.
std::vector<AffineFunction> box_interior_constraints(const SolidBox& box);

}  // namespace pa
