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

#include "pa/json_io.hpp"

#include <utility>

#include "pa/errors.hpp"

namespace pa::io {
namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorKind::kMalformedInput, what);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
  return j.at(key);
}

const Json& array_field(const Json& j, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array()) malformed(std::string("field '") + key + "' must be an array");
  return a;
}

std::int64_t integer_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer()) malformed(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

Anchor anchor_from_json(const Json& j) {
  if (!j.is_array()) malformed("anchor must be an array");
  Anchor a;
  for (const auto& c : j) a.push_back(integer_from_json(c, "anchor coordinate"));
  return a;
}

Json cell_json(const CellComplex& complex, std::size_t k) {
  const Cell& cell = complex.cells[k];
  Json extent = Json::array();
  for (std::size_t i = 0; i < complex.box.dim(); ++i) {
    const auto [lo, hi] = coordinate_range(cell, i);
    extent.push_back(Json::array({to_json(lo), to_json(hi)}));
  }
  Json out = Json::object();
  out["witness"] = to_json(cell.witness);
  out["signs"] = cell.signs;
  out["component"] = complex.assignment[k];
  out["extent"] = std::move(extent);
  return out;
}

Json affine_list(const std::vector<AffineFunction>& list) {
  Json out = Json::array();
  for (const auto& f : list) out.push_back(to_json(f));
  return out;
}

Json family_members(const LocallyFiniteFamily& family, std::int64_t radius) {
  Json out = Json::array();
  for (const auto& m : family.members_within(radius)) {
    Json item = Json::object();
    item["anchor"] = m.anchor;
    item["support"] = to_json(m.support);
    item["expr"] = to_json(m.expr);
    out.push_back(std::move(item));
  }
  return out;
}

LocallyFiniteFamily family_from_json(const Json& j, std::size_t dim, bool positive,
                                     const Rational& reach, const FamilyMetadata& metadata) {
  if (!j.is_array()) malformed("members must be an array");
  std::vector<BoxedPA> members;
  for (const auto& item : j) {
    members.push_back(BoxedPA{expr_from_json(field(item, "expr")),
                              box_from_json(field(item, "support")),
                              anchor_from_json(field(item, "anchor"))});
  }
  return LocallyFiniteFamily::from_members(dim, std::move(members), positive, reach, metadata);
}

}  // namespace

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const Point& p) {
  Json out = Json::array();
  for (const auto& c : p) out.push_back(to_json(c));
  return out;
}

Json to_json(const AffineFunction& f) {
  Json out = Json::object();
  out["v"] = to_json(f.v);
  out["b"] = to_json(f.b);
  return out;
}

Json to_json(const MinMaxExpr& e) {
  Json clauses = Json::array();
  for (const auto& c : e.clauses()) clauses.push_back(affine_list(c));
  Json out = Json::object();
  out["m"] = e.dim();
  out["clauses"] = std::move(clauses);
  return out;
}

Json to_json(const SolidBox& box) {
  Json out = Json::object();
  out["center"] = to_json(box.center());
  out["radius"] = to_json(box.radius());
  return out;
}

Json to_json(const CellComplex& complex) {
  Json hyperplanes = Json::array();
  for (const auto& h : complex.hyperplanes) hyperplanes.push_back(to_json(h.g()));
  Json cells = Json::array();
  for (std::size_t k = 0; k < complex.cells.size(); ++k) cells.push_back(cell_json(complex, k));
  Json out = Json::object();
  out["box"] = to_json(complex.box);
  out["hyperplanes"] = std::move(hyperplanes);
  out["components"] = affine_list(complex.components);
  out["cells"] = std::move(cells);
  return out;
}

Json pairs_to_json(const CellComplex& complex, const std::vector<CharacteristicPair>& pairs) {
  Json list = Json::array();
  for (const auto& p : pairs) {
    Json item = Json::object();
    item["component"] = to_json(p.component);
    item["cells"] = p.region_cells;
    list.push_back(std::move(item));
  }
  Json cells = Json::array();
  for (std::size_t k = 0; k < complex.cells.size(); ++k) cells.push_back(cell_json(complex, k));
  Json out = Json::object();
  out["box"] = to_json(complex.box);
  out["components"] = affine_list(complex.components);
  out["pairs"] = std::move(list);
  out["cells"] = std::move(cells);
  return out;
}

Json lpa_pairs_to_json(const LpaPairs& pairs) {
  Json out = pairs_to_json(pairs.complex, pairs.pairs);
  for (std::size_t i = 0; i < pairs.pairs.size(); ++i) {
    out["pairs"][i]["component_id"] = pairs.pair_ids[i];
  }
  out["catalog"] = affine_list(pairs.catalog);
  out["pairs_touching_box"] = pairs.pairs.size();
  return out;
}

Json to_json(const LPAFunction& h, std::int64_t radius) {
  const auto& fam = h.family;
  Json out = Json::object();
  out["m"] = fam.dim();
  out["mode"] = h.mode == Aggregate::kSup ? "sup" : "inf";
  out["positivity"] = fam.positive();
  out["reach"] = to_json(fam.reach());
  std::int64_t truncation = radius;
  if (!fam.is_generated() && fam.metadata().truncation_radius) {
    truncation = std::min(radius, *fam.metadata().truncation_radius);
  }
  out["truncation_radius"] = truncation;
  if (fam.metadata().globally_nonnegative) {
    out["nonnegativity"] = "global";
  } else if (fam.metadata().certified_radius) {
    out["nonnegativity"] = *fam.metadata().certified_radius;
  }
  out["members"] = family_members(fam, radius);
  if (h.base) out["base"] = to_json(*h.base);
  if (h.subtracted) {
    Json sub = Json::object();
    sub["reach"] = to_json(h.subtracted->reach());
    sub["members"] = family_members(*h.subtracted, radius);
    out["subtracted"] = std::move(sub);
  }
  return out;
}

Json to_json(const ApproxReport& report) {
  Json steps = Json::array();
  for (const auto& [anchor, step] : report.grid_steps) {
    Json item = Json::object();
    item["anchor"] = anchor;
    item["step"] = to_json(step);
    steps.push_back(std::move(item));
  }
  Json out = Json::object();
  out["epsilon"] = to_json(report.epsilon);
  out["boxes_processed"] = report.boxes_processed;
  out["grid_steps"] = std::move(steps);
  out["max_observed_error"] = to_json(report.max_observed_error);
  out["certified_bound"] = report.certified_bound ? to_json(*report.certified_bound) : Json();
  out["covered_radius"] = report.covered_radius;
  out["samples"] = report.samples.size();
  return out;
}

Json to_json(const ApproxSequence& sequence) {
  Json terms = Json::array();
  for (std::size_t k = 0; k < sequence.terms.size(); ++k) {
    Json item = Json::object();
    item["k"] = k + 1;
    item["bound"] = to_json(sequence.bounds[k]);
    item["expr"] = to_json(sequence.terms[k]);
    terms.push_back(std::move(item));
  }
  Json out = Json::object();
  out["terms"] = std::move(terms);
  return out;
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  malformed("expected a rational string, got " + j.dump());
}

Point point_from_json(const Json& j) {
  if (!j.is_array()) malformed("point must be an array");
  Point p;
  for (const auto& c : j) p.push_back(rational_from_json(c));
  return p;
}

AffineFunction affine_from_json(const Json& j) {
  return AffineFunction{point_from_json(field(j, "v")), rational_from_json(field(j, "b"))};
}

MinMaxExpr expr_from_json(const Json& j) {
  const auto m = integer_from_json(field(j, "m"), "m");
  if (m <= 0) malformed("m must be positive");
  std::vector<MinMaxExpr::Clause> clauses;
  for (const auto& c : array_field(j, "clauses")) {
    if (!c.is_array()) malformed("clause must be an array");
    MinMaxExpr::Clause clause;
    for (const auto& f : c) clause.push_back(affine_from_json(f));
    clauses.push_back(std::move(clause));
  }
  try {
    return MinMaxExpr(static_cast<std::size_t>(m), std::move(clauses));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kInvalidArgument) malformed(e.detail());
    throw;
  }
}

SolidBox box_from_json(const Json& j) {
  Point center = point_from_json(field(j, "center"));
  Rational radius = rational_from_json(field(j, "radius"));
  if (center.empty()) malformed("box center must be non-empty");
  if (radius.sign() <= 0) malformed("box radius must be positive");
  return SolidBox(std::move(center), std::move(radius));
}

CellComplex complex_from_json(const Json& j) {
  CellComplex c{box_from_json(field(j, "box")), {}, {}, {}, {}};
  const std::size_t m = c.box.dim();
  for (const auto& h : array_field(j, "hyperplanes")) {
    AffineFunction g = affine_from_json(h);
    require_same_dim(m, g.dim(), "hyperplane");
    if (g.is_constant()) malformed("hyperplane with zero gradient");
    c.hyperplanes.emplace_back(std::move(g));
  }
  for (const auto& f : array_field(j, "components")) {
    c.components.push_back(affine_from_json(f));
    require_same_dim(m, c.components.back().dim(), "component");
  }
  for (const auto& item : array_field(j, "cells")) {
    Cell cell;
    cell.witness = point_from_json(field(item, "witness"));
    require_same_dim(m, cell.witness.size(), "cell witness");
    const Json& signs = field(item, "signs");
    if (!signs.is_string()) malformed("signs must be a string");
    cell.signs = signs.get<std::string>();
    if (cell.signs.size() != c.hyperplanes.size()) malformed("sign vector length");
    cell.constraints = box_interior_constraints(c.box);
    for (std::size_t k = 0; k < cell.signs.size(); ++k) {
      const char s = cell.signs[k];
      if (s != '+' && s != '-') malformed("signs must be '+' or '-'");
      cell.constraints.push_back(s == '+' ? c.hyperplanes[k].g() : -c.hyperplanes[k].g());
    }
    const auto component = integer_from_json(field(item, "component"), "component");
    if (component < 0 || static_cast<std::size_t>(component) >= c.components.size()) {
      malformed("component index out of range");
    }
    c.assignment.push_back(static_cast<std::size_t>(component));
    c.cells.push_back(std::move(cell));
  }
  return c;
}

LPAFunction lpa_from_json(const Json& j) {
  const auto m = integer_from_json(field(j, "m"), "m");
  if (m <= 0) malformed("m must be positive");
  const auto dim = static_cast<std::size_t>(m);
  Aggregate mode = Aggregate::kSup;
  if (j.contains("mode")) {
    const Json& s = j.at("mode");
    if (s == "inf") {
      mode = Aggregate::kInf;
    } else if (s != "sup") {
      malformed("mode must be 'sup' or 'inf'");
    }
  }
  const Json& positivity = field(j, "positivity");
  if (!positivity.is_boolean()) malformed("positivity must be a boolean");
  const Rational reach = j.contains("reach") ? rational_from_json(j.at("reach")) : Rational(2);
  if (reach.sign() <= 0) malformed("reach must be positive");
  FamilyMetadata metadata;
  if (j.contains("truncation_radius")) {
    metadata.truncation_radius = integer_from_json(j.at("truncation_radius"), "truncation_radius");
  }
  if (j.contains("nonnegativity")) {
    const Json& n = j.at("nonnegativity");
    if (n == "global") {
      metadata.globally_nonnegative = true;
    } else {
      metadata.certified_radius = integer_from_json(n, "nonnegativity");
    }
  }
  LPAFunction h{mode,
                family_from_json(field(j, "members"), dim, positivity.get<bool>(), reach, metadata),
                std::nullopt, std::nullopt};
  if (j.contains("base")) {
    h.base = expr_from_json(j.at("base"));
    require_same_dim(dim, h.base->dim(), "base");
  }
  if (j.contains("subtracted")) {
    const Json& sub = j.at("subtracted");
    const Rational sub_reach =
        sub.contains("reach") ? rational_from_json(sub.at("reach")) : Rational(2);
    if (sub_reach.sign() <= 0) malformed("reach must be positive");
    h.subtracted = family_from_json(field(sub, "members"), dim, true, sub_reach, {});
  }
  return h;
}

bool is_lpa_document(const Json& j) { return j.is_object() && j.contains("members"); }

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Point parse_point(const std::string& text) {
  Point p;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    p.push_back(Rational::parse(text.substr(start, comma - start)));
    if (comma == std::string::npos) return p;
    start = comma + 1;
  }
}

}  // namespace pa::io
