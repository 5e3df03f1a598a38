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

#include "pa/affine.hpp"

#include <utility>

#include "pa/errors.hpp"

namespace pa {

AffineFunction AffineFunction::constant(std::size_t dim, Rational value) {
  return AffineFunction{std::vector<Rational>(dim), std::move(value)};
}

AffineFunction AffineFunction::coordinate(std::size_t dim, std::size_t i, Rational coef,
                                          Rational offset) {
  if (i >= dim) throw Error(ErrorKind::kInvalidArgument, "coordinate index out of range");
  AffineFunction f = constant(dim, std::move(offset));
  f.v[i] = std::move(coef);
  return f;
}

bool AffineFunction::is_constant() const {
  for (const auto& c : v) {
    if (!c.is_zero()) return false;
  }
  return true;
}

AffineFunction& AffineFunction::operator+=(const AffineFunction& rhs) {
  require_same_dim(dim(), rhs.dim(), "affine sum");
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += rhs.v[i];
  b += rhs.b;
  return *this;
}

AffineFunction& AffineFunction::operator-=(const AffineFunction& rhs) {
  require_same_dim(dim(), rhs.dim(), "affine difference");
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= rhs.v[i];
  b -= rhs.b;
  return *this;
}

AffineFunction& AffineFunction::operator*=(const Rational& factor) {
  for (auto& c : v) c *= factor;
  b *= factor;
  return *this;
}

AffineFunction AffineFunction::operator-() const {
  AffineFunction f = *this;
  for (auto& c : f.v) c = -c;
  f.b = -f.b;
  return f;
}

Rational eval_affine(const AffineFunction& f, const Point& x) {
  require_same_dim(f.dim(), x.size(), "eval_affine");
  Rational acc = f.b;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!f.v[i].is_zero()) acc += f.v[i] * x[i];
  }
  return acc;
}

bool affine_equal(const AffineFunction& f, const AffineFunction& g) {
  require_same_dim(f.dim(), g.dim(), "affine_equal");
  return f == g;
}

Hyperplane::Hyperplane(AffineFunction g) : g_(std::move(g)) {
  if (g_.is_constant()) {
    throw Error(ErrorKind::kInvalidArgument, "hyperplane needs a nonzero gradient");
  }
}

Hyperplane Hyperplane::normalized() const {
  for (const auto& c : g_.v) {
    if (!c.is_zero()) return Hyperplane(g_ * (Rational(1) / c));
  }
  return *this;  // unreachable: constructor rejects zero gradients
}

std::optional<Hyperplane> difference_hyperplane(const AffineFunction& f_i,
                                                const AffineFunction& f_j) {
  if (affine_equal(f_i, f_j)) {
    throw Error(ErrorKind::kIdenticalComponents, "components are equal");
  }
  AffineFunction d = f_i - f_j;
  if (d.is_constant()) return std::nullopt;
  return Hyperplane(std::move(d));
}

SolidBox::SolidBox(Point center, Rational radius)
    : center_(std::move(center)), radius_(std::move(radius)) {
  if (radius_.sign() <= 0) {
    throw Error(ErrorKind::kInvalidArgument, "box radius must be positive");
  }
}

SolidBox SolidBox::omega(std::size_t dim, Rational n) {
  return SolidBox(Point(dim), std::move(n));
}

bool SolidBox::contains(const Point& x) const {
  require_same_dim(dim(), x.size(), "box contains");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if ((x[i] - center_[i]).abs() > radius_) return false;
  }
  return true;
}

bool SolidBox::interior_contains(const Point& x) const {
  require_same_dim(dim(), x.size(), "box interior");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if ((x[i] - center_[i]).abs() >= radius_) return false;
  }
  return true;
}

bool SolidBox::contains(const SolidBox& inner) const {
  require_same_dim(dim(), inner.dim(), "box containment");
  for (std::size_t i = 0; i < center_.size(); ++i) {
    if (inner.lower(i) < lower(i) || inner.upper(i) > upper(i)) return false;
  }
  return true;
}

bool SolidBox::intersects(const SolidBox& other) const {
  require_same_dim(dim(), other.dim(), "box intersection");
  const Rational reach = radius_ + other.radius_;
  for (std::size_t i = 0; i < center_.size(); ++i) {
    if ((center_[i] - other.center_[i]).abs() > reach) return false;
  }
  return true;
}

Rational min_over_box(const AffineFunction& f, const SolidBox& box) {
  Rational spread;
  for (const auto& c : f.v) spread += c.abs();
  return eval_affine(f, box.center()) - spread * box.radius();
}

Rational max_over_box(const AffineFunction& f, const SolidBox& box) {
  Rational spread;
  for (const auto& c : f.v) spread += c.abs();
  return eval_affine(f, box.center()) + spread * box.radius();
}

std::vector<AffineFunction> box_interior_constraints(const SolidBox& box) {
  std::vector<AffineFunction> out;
  out.reserve(2 * box.dim());
  for (std::size_t i = 0; i < box.dim(); ++i) {
    out.push_back(AffineFunction::coordinate(box.dim(), i, 1, -box.lower(i)));
    out.push_back(AffineFunction::coordinate(box.dim(), i, -1, box.upper(i)));
  }
  return out;
}

}  // namespace pa
