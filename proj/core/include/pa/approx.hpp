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
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pa/affine.hpp"
#include "pa/expr.hpp"
#include "pa/limits.hpp"
#include "pa/lpa.hpp"

namespace pa {

// A continuous target sampled exactly at rational points.
struct ContinuousOracle {
  std::string name;
  std::size_t dim = 1;
  std::function<Rational(const Point&)> evaluate;
  // L(B) with |f(x) - f(y)| <= L(B) |x - y|_inf on B. Empty when no
  // continuity data is available (best-effort mode).
  std::function<Rational(const SolidBox&)> lipschitz;
  bool nonnegative = false;
};

// max(f, 0) and max(-f, 0); both keep the Lipschitz data of f.
ContinuousOracle positive_part(const ContinuousOracle& f);
ContinuousOracle negative_part(const ContinuousOracle& f);

// Built-in oracles: "abs", "min-abs-1", "quadratic", "pyramid",
// "poly:c0,c1,..." (univariate) and "const:c". Throws kMalformedInput for
// unknown names or bad parameters.
ContinuousOracle make_oracle(const std::string& spec, std::size_t dim = 1);
std::vector<std::string> oracle_names();

struct Interpolant {
  MinMaxExpr expr;
  Rational vertex_min;
  Rational vertex_max;
  std::size_t vertices = 0;
};

// Linear interpolation of the oracle on the Kuhn triangulation of the grid
// of pitch `step` over `box`, in max-of-mins form. Equal to the oracle at
// every grid vertex; within L(box) * step of it on the box.
Interpolant kuhn_interpolant(const ContinuousOracle& oracle, const SolidBox& box,
                             const Rational& step, const Limits& limits = {});

struct ValidationSample {
  Point x;
  Rational f;
  Rational h;
};

struct ApproxReport {
  Rational epsilon;
  std::size_t boxes_processed = 0;
  // grid pitch used for the box anchored at each lattice point
  std::map<Anchor, Rational> grid_steps;
  Rational max_observed_error;
  // std::nullopt in best-effort mode
  std::optional<Rational> certified_bound;
  // |f - h| <= certified_bound holds on Omega_{covered_radius}
  std::int64_t covered_radius = 0;
  std::vector<ValidationSample> samples;
};

struct ApproxOptions {
  std::size_t samples = 500;
  std::uint64_t seed = 1;
  // pitch when the oracle has no Lipschitz data
  Rational fallback_step = Rational(1, 8);
  Limits limits;
};

struct UniformApprox {
  LPAFunction h;
  ApproxReport report;
};

// LPA function within epsilon of the oracle on Omega_{radius + 1}, built on
// the boxes c + 2B for anchors c with |c|_inf <= radius.
UniformApprox uniform_approx(const ContinuousOracle& oracle, const Rational& epsilon,
                             std::int64_t radius, const ApproxOptions& options = {});

struct ApproxSequence {
  std::vector<MinMaxExpr> terms;
  // bounds[k - 1] bounds the error of term k on Omega_k
  std::vector<Rational> bounds;
};

// h_1 <= h_2 <= ... with 0 <= h_k <= f everywhere and
// f - h_k <= 2 L(Omega_{k+1}) 2^-k on Omega_k.
ApproxSequence monotone_under_approx(const ContinuousOracle& oracle, std::size_t count,
                                     const Limits& limits = {});

// g_k - h_k where g and h are the monotone sequences of the positive and
// negative parts.
ApproxSequence order_approx(const ContinuousOracle& oracle, std::size_t count,
                            const Limits& limits = {});

// Rational point drawn uniformly from a 1/denominator grid on the box.
Point random_point(std::mt19937_64& rng, const SolidBox& box, std::int64_t denominator = 1024);

}  // namespace pa
