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

#include <cstdint>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "pa/affine.hpp"
#include "pa/errors.hpp"
#include "pa/expr.hpp"

namespace pa::test {

inline Rational q(const char* text) { return Rational::parse(text); }

inline AffineFunction aff(std::vector<Rational> v, Rational b) {
  return AffineFunction{std::move(v), std::move(b)};
}

// c * t + b on the line.
inline AffineFunction lin(Rational c, Rational b = 0) { return aff({std::move(c)}, std::move(b)); }

inline MinMaxExpr expr1(std::vector<std::vector<AffineFunction>> clauses) {
  return MinMaxExpr(1, std::move(clauses));
}

// max(min(t, 1), min(-t, 1)) = min(|t|, 1)
inline MinMaxExpr example1() {
  return expr1({{lin(1), lin(0, 1)}, {lin(-1), lin(0, 1)}});
}

inline MinMaxExpr abs1() { return expr1({{lin(1)}, {lin(-1)}}); }

inline SolidBox omega(std::size_t m, long n) { return SolidBox::omega(m, Rational(n)); }

// Passes when `f` throws pa::Error of the given kind.
template <typename F>
::testing::AssertionResult throws_kind(F&& f, ErrorKind kind) {
  try {
    f();
  } catch (const Error& e) {
    if (e.kind() == kind) return ::testing::AssertionSuccess();
    return ::testing::AssertionFailure() << "threw " << error_kind_name(e.kind()) << ": " << e.detail();
  }
  return ::testing::AssertionFailure() << "did not throw " << error_kind_name(kind);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(gen_);
  }

  // Rational in [lo, hi] with denominator 1, 2 or 3.
  Rational coefficient(long lo = -10, long hi = 10) {
    const long d = static_cast<long>(integer(1, 3));
    return Rational(static_cast<long>(integer(lo * d, hi * d)), d);
  }

  Point point(const SolidBox& box, long denominator = 97) {
    Point p(box.dim());
    for (std::size_t i = 0; i < box.dim(); ++i) {
      const Rational lo = box.lower(i) * Rational(denominator);
      const Rational hi = box.upper(i) * Rational(denominator);
      p[i] = Rational(static_cast<long>(integer(lo.ceil(), hi.floor())), denominator);
    }
    return p;
  }

  AffineFunction affine(std::size_t m) {
    AffineFunction f = AffineFunction::constant(m, coefficient());
    for (auto& c : f.v) c = coefficient();
    return f;
  }

  // At most `max_members` affine members spread over random clauses.
  MinMaxExpr expr(std::size_t m, std::size_t max_members = 6) {
    const auto members = static_cast<std::size_t>(integer(1, static_cast<std::int64_t>(max_members)));
    const auto clauses = static_cast<std::size_t>(integer(1, static_cast<std::int64_t>(members)));
    std::vector<MinMaxExpr::Clause> out(clauses);
    for (std::size_t k = 0; k < members; ++k) {
      const auto c = k < clauses ? k : static_cast<std::size_t>(integer(0, clauses - 1));
      out[c].push_back(affine(m));
    }
    return MinMaxExpr(m, std::move(out));
  }

  std::size_t dim(std::size_t max_dim = 3) {
    return static_cast<std::size_t>(integer(1, static_cast<std::int64_t>(max_dim)));
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace pa::test
