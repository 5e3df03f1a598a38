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

// Built-in oracle registry.

#include <algorithm>
#include <utility>

#include "pa/approx.hpp"
#include "pa/errors.hpp"

namespace pa {
namespace {

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(Rational::parse(text.substr(start, comma - start)));
    if (comma == std::string::npos) return out;
    start = comma + 1;
  }
}

Rational l1_norm(const Point& x) {
  Rational s(0);
  for (const auto& c : x) s += c.abs();
  return s;
}

Rational max_abs(const SolidBox& box, std::size_t i) {
  return std::max(box.lower(i).abs(), box.upper(i).abs());
}

std::function<Rational(const SolidBox&)> constant_lipschitz(Rational l) {
  return [l = std::move(l)](const SolidBox&) { return l; };
}

}  // namespace

std::vector<std::string> oracle_names() {
  return {"abs", "min-abs-1", "quadratic", "pyramid", "poly:c0,c1,...", "const:c"};
}

ContinuousOracle make_oracle(const std::string& spec, std::size_t dim) {
  if (dim == 0) throw Error(ErrorKind::kMalformedInput, "oracle dimension must be positive");
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const std::string params = colon == std::string::npos ? "" : spec.substr(colon + 1);
  const bool has_params = colon != std::string::npos;
  const Rational m(static_cast<long>(dim));

  ContinuousOracle o;
  o.name = spec;
  o.dim = dim;
  if (name == "abs" && !has_params) {
    o.evaluate = l1_norm;
    o.lipschitz = constant_lipschitz(m);
    o.nonnegative = true;
  } else if (name == "min-abs-1" && !has_params) {
    o.evaluate = [](const Point& x) { return std::min(l1_norm(x), Rational(1)); };
    o.lipschitz = constant_lipschitz(m);
    o.nonnegative = true;
  } else if (name == "quadratic" && !has_params) {
    o.evaluate = [](const Point& x) {
      Rational s(0);
      for (const auto& c : x) s += c * c;
      return s;
    };
    o.lipschitz = [](const SolidBox& box) {
      Rational l(0);
      for (std::size_t i = 0; i < box.dim(); ++i) l += max_abs(box, i) * 2;
      return l;
    };
    o.nonnegative = true;
  } else if (name == "pyramid" && !has_params) {
    o.evaluate = [](const Point& x) {
      Rational r(0);
      for (const auto& c : x) r = std::max(r, c.abs());
      return std::max(Rational(1) - r, Rational(0));
    };
    o.lipschitz = constant_lipschitz(1);
    o.nonnegative = true;
  } else if (name == "poly" && has_params) {
    if (dim != 1) throw Error(ErrorKind::kDimensionMismatch, "poly oracles are univariate");
    const auto coeffs = parse_list(params);
    o.evaluate = [coeffs](const Point& x) {
      Rational v(0);
      for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * x[0] + *it;
      return v;
    };
    o.lipschitz = [coeffs](const SolidBox& box) {
      const Rational r = max_abs(box, 0);
      Rational l(0);
      Rational power(1);
      for (std::size_t k = 1; k < coeffs.size(); ++k) {
        l += coeffs[k].abs() * Rational(static_cast<long>(k)) * power;
        power *= r;
      }
      return l;
    };
  } else if (name == "const" && has_params) {
    const Rational c = Rational::parse(params);
    o.evaluate = [c](const Point&) { return c; };
    o.lipschitz = constant_lipschitz(0);
    o.nonnegative = c.sign() >= 0;
  } else {
    throw Error(ErrorKind::kMalformedInput, "unknown oracle '" + spec + "'");
  }
  return o;
}

}  // namespace pa
