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
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pa/affine.hpp"
#include "pa/approx.hpp"
#include "pa/cells.hpp"
#include "pa/expr.hpp"
#include "pa/lpa.hpp"

// JSON schemas. Rationals are strings "p" or "p/q"; parsers also accept JSON
// integers. Parse failures throw Error(kMalformedInput).
namespace pa::io {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const Point& p);
Json to_json(const AffineFunction& f);        // {"v": [...], "b": ...}
Json to_json(const MinMaxExpr& e);            // {"m": m, "clauses": [[affine, ...], ...]}
Json to_json(const SolidBox& box);            // {"center": [...], "radius": ...}
// {"box", "hyperplanes", "components", "cells": [{"witness", "signs",
// "component", "extent"}]}
Json to_json(const CellComplex& complex);
// {"box", "components", "pairs": [{"component", "cells"}], "cells"}
Json pairs_to_json(const CellComplex& complex, const std::vector<CharacteristicPair>& pairs);
Json lpa_pairs_to_json(const LpaPairs& pairs);
// Listed members up to `radius`; generated families are truncated there and
// the radius is recorded.
Json to_json(const LPAFunction& h, std::int64_t radius);
Json to_json(const ApproxReport& report);
Json to_json(const ApproxSequence& sequence);

Rational rational_from_json(const Json& j);
Point point_from_json(const Json& j);
AffineFunction affine_from_json(const Json& j);
MinMaxExpr expr_from_json(const Json& j);
SolidBox box_from_json(const Json& j);
CellComplex complex_from_json(const Json& j);
LPAFunction lpa_from_json(const Json& j);

// A document holding an LPA function (has "members") rather than an
// expression.
bool is_lpa_document(const Json& j);

Json parse(const std::string& text);
// Two-space indentation and a trailing newline.
std::string dump(const Json& j);

// CSV-separated rationals, e.g. "1/2,-3".
Point parse_point(const std::string& text);

}  // namespace pa::io
