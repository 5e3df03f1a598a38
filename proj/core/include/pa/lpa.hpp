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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "pa/affine.hpp"
#include "pa/cells.hpp"
#include "pa/expr.hpp"
#include "pa/limits.hpp"

namespace pa {

// An integer lattice point c_n indexing a family member.
using Anchor = std::vector<std::int64_t>;

Point to_point(const Anchor& anchor);

// Integer points with max-norm <= radius, ordered by increasing max-norm and
// then lexicographically. This is the enumeration (c_n) used for families.
std::vector<Anchor> lattice_points(std::size_t dim, std::int64_t radius);

// A PA function that vanishes outside its support box.
struct BoxedPA {
  MinMaxExpr expr;
  SolidBox support;
  Anchor anchor;
};

// Informational flags carried alongside a family.
struct FamilyMetadata {
  // Serialized families only list anchors with max-norm <= this radius.
  std::optional<std::int64_t> truncation_radius;
  // Nonnegativity of the decomposed function was certified on Omega_N for
  // this N; std::nullopt with `globally_nonnegative` means on all of R^m.
  std::optional<std::int64_t> certified_radius;
  bool globally_nonnegative = false;
};

// A lattice-indexed family of boxed PA functions. Every member anchored at c
// has support inside c + reach * B_inf^m, so each bounded set meets finitely
// many supports and those members can be listed directly. Anchors without a
// listed member carry the zero function; a listed family may hold several
// members on one anchor.
class LocallyFiniteFamily {
 public:
  using Generator = std::function<BoxedPA(const Anchor&)>;

  explicit LocallyFiniteFamily(std::size_t dim, bool positive = true);

  static LocallyFiniteFamily from_members(std::size_t dim, std::vector<BoxedPA> members,
                                          bool positive, Rational reach = 2,
                                          FamilyMetadata metadata = {});
  // One member per lattice point, produced on demand and memoized. The
  // generator must be pure.
  static LocallyFiniteFamily generated(std::size_t dim, Generator generator, bool positive,
                                       Rational reach = 2, FamilyMetadata metadata = {});

  std::size_t dim() const { return dim_; }
  bool positive() const { return positive_; }
  const Rational& reach() const { return reach_; }
  bool is_generated() const { return static_cast<bool>(state_); }
  const FamilyMetadata& metadata() const { return metadata_; }

  // Members whose closed support meets `box`, in anchor enumeration order.
  std::vector<BoxedPA> members_meeting(const SolidBox& box) const;
  // Members whose closed support contains x.
  std::vector<BoxedPA> members_containing(const Point& x) const;
  // Members anchored within max-norm `radius`; all of them for finite lists.
  std::vector<BoxedPA> members_within(std::int64_t radius) const;
  // Finite families only.
  const std::vector<BoxedPA>& listed_members() const { return members_; }

 private:
  struct GeneratorState;

  LocallyFiniteFamily(std::size_t dim, bool positive, Rational reach, FamilyMetadata metadata);
  void check_member(const BoxedPA& member) const;
  std::vector<BoxedPA> generated_in_range(const std::vector<std::int64_t>& lo,
                                          const std::vector<std::int64_t>& hi) const;

  std::size_t dim_;
  bool positive_;
  Rational reach_;
  FamilyMetadata metadata_;
  std::vector<BoxedPA> members_;
  std::shared_ptr<GeneratorState> state_;
};

enum class Aggregate { kSup, kInf };

// base + sup (or inf) of family - sup of subtracted. The aggregate always
// includes the zero function, since all but finitely many members vanish at
// any given point.
struct LPAFunction {
  Aggregate mode = Aggregate::kSup;
  LocallyFiniteFamily family;
  std::optional<MinMaxExpr> base;
  std::optional<LocallyFiniteFamily> subtracted;
};

// Equals height on center + inner * B, vanishes outside center + outer * B
// and is affine along L-infinity rays in between.
MinMaxExpr bump(const Point& center, const Rational& inner, const Rational& outer,
                const Rational& height);

LPAFunction sup_family(LocallyFiniteFamily family);
LPAFunction inf_family(LocallyFiniteFamily family);

Rational eval_lpa(const LPAFunction& h, const Point& x);

// A MinMaxExpr equal to h on Omega_n.
MinMaxExpr restrict_to_box(const LPAFunction& h, std::int64_t n, const Limits& limits = {});

struct TileOptions {
  bool positive_check = true;
  // Nonnegativity is certified on Omega_N when no clause is a nonnegative
  // constant.
  std::int64_t certify_radius = 4;
  Limits limits;
};

// Member at c: f meet bump(c, 1, 2, M_c) with M_c = max of f on c + B plus
// one. Agrees with f on c + B and vanishes outside c + 2B.
LocallyFiniteFamily tile_decompose(const MinMaxExpr& f, const TileOptions& options = {});

// Number of members whose support meets Omega_n.
std::size_t verify_locally_finite(const LocallyFiniteFamily& family, std::int64_t n);

struct LpaPairs {
  // Components in order of discovery over Omega_1, ..., Omega_n; an id is
  // stable across n.
  std::vector<AffineFunction> catalog;
  std::vector<CharacteristicPair> pairs;
  // catalog index of each pair's component
  std::vector<std::size_t> pair_ids;
  CellComplex complex;
};

LpaPairs lpa_characteristic_pairs(const LPAFunction& h, std::int64_t n,
                                  const Limits& limits = {});

// Cell-level check that the member is zero outside its support: on a box one
// unit larger than the support, every cell reaching outside the support is
// assigned the zero component.
bool vanishes_outside_support(const BoxedPA& member, const Limits& limits = {});

enum class LatticeOp { kJoin, kMeet };

// Members join(a, b) or meet(a, b) for every pair of listed members a < b.
// A join is supported on the smallest cube containing both supports; a meet
// of nonnegative members on the smaller support.
LocallyFiniteFamily pairwise_closure(const LocallyFiniteFamily& family, LatticeOp op);

}  // namespace pa
