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

#include "pa/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

#include <CLI11.hpp>

#include "pa/approx.hpp"
#include "pa/cells.hpp"
#include "pa/errors.hpp"
#include "pa/expr.hpp"
#include "pa/json_io.hpp"
#include "pa/lpa.hpp"

namespace pa::cli {
namespace {

using io::Json;

struct Options {
  std::string expr;
  std::string family;
  std::string out;
  std::string format = "json";
  std::string box;
  std::string oracle;
  std::vector<std::string> points;
  std::optional<std::int64_t> radius;
  std::string step;
  std::string eps;
  std::string center;
  std::string inner = "1";
  std::string outer = "2";
  std::string height = "1";
  std::size_t dim = 1;
  std::size_t count = 3;
  std::size_t samples = 500;
  std::uint64_t seed = 1;
  int precision = 12;
  std::optional<std::size_t> hyperplane_limit;
  bool no_positive_check = false;
  std::optional<std::int64_t> certify_radius;
  bool order = false;
};

struct Io {
  std::istream& in;
  std::ostream& out;
};

std::size_t env_size(const char* name, std::size_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v == 0) {
    throw Error(ErrorKind::kMalformedInput, std::string(name) + " must be a positive integer");
  }
  return static_cast<std::size_t>(v);
}

// Restrictions of families overlap many supports, so they get a wider
// default arrangement limit than single expressions.
constexpr std::size_t kFamilyHyperplaneLimit = 1024;

Limits limits_of(const Options& o, std::size_t default_hyperplanes = Limits{}.hyperplane_limit) {
  Limits l;
  l.clause_budget = env_size("PA_CLAUSE_BUDGET", l.clause_budget);
  l.grid_budget = env_size("PA_GRID_BUDGET", l.grid_budget);
  l.hyperplane_limit = o.hyperplane_limit.value_or(default_hyperplanes);
  return l;
}

std::string read_text(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw Error(ErrorKind::kMalformedInput, "cannot read " + path);
  buffer << file.rdbuf();
  return buffer.str();
}

// The document named by --expr or --family. Approximation output wraps its
// LPA function under "function".
Json load_document(const Options& o, Io io) {
  const std::string& path = o.expr.empty() ? o.family : o.expr;
  if (path.empty()) throw Error(ErrorKind::kMalformedInput, "need --expr or --family");
  Json j = io::parse(read_text(path, io.in));
  if (j.is_object() && j.contains("function") && j.contains("report")) return j.at("function");
  return j;
}

MinMaxExpr load_expr(const Options& o, Io io) {
  const Json j = load_document(o, io);
  if (io::is_lpa_document(j)) throw Error(ErrorKind::kMalformedInput, "expected an expression");
  return io::expr_from_json(j);
}

LPAFunction load_lpa(const Options& o, Io io) {
  const Json j = load_document(o, io);
  if (!io::is_lpa_document(j)) throw Error(ErrorKind::kMalformedInput, "expected a family");
  return io::lpa_from_json(j);
}

Rational parse_rational(const std::string& text, const char* flag) {
  if (text.empty()) throw Error(ErrorKind::kMalformedInput, std::string("missing ") + flag);
  return Rational::parse(text);
}

std::int64_t radius_or(const Options& o, std::int64_t fallback) {
  const std::int64_t r = o.radius.value_or(fallback);
  if (r <= 0) throw Error(ErrorKind::kMalformedInput, "--radius must be positive");
  return r;
}

SolidBox analysis_box(const Options& o, std::size_t dim) {
  if (!o.box.empty()) {
    const auto semi = o.box.find(';');
    if (semi == std::string::npos) {
      throw Error(ErrorKind::kMalformedInput, "--box expects \"center;radius\"");
    }
    Point center = io::parse_point(o.box.substr(0, semi));
    Rational radius = Rational::parse(o.box.substr(semi + 1));
    if (radius.sign() <= 0) throw Error(ErrorKind::kMalformedInput, "box radius must be positive");
    require_same_dim(dim, center.size(), "--box");
    return SolidBox(std::move(center), std::move(radius));
  }
  if (!o.radius) throw Error(ErrorKind::kMalformedInput, "need --box or --radius");
  return SolidBox::omega(dim, Rational(static_cast<long>(radius_or(o, 1))));
}

void emit(const Options& o, Io io, const std::string& text) {
  if (o.out.empty()) {
    io.out << text;
    return;
  }
  std::ofstream file(o.out);
  if (!file) throw Error(ErrorKind::kMalformedInput, "cannot write " + o.out);
  file << text;
}

int do_eval(const Options& o, Io io) {
  if (o.points.empty()) throw Error(ErrorKind::kMalformedInput, "need --point");
  const Json j = load_document(o, io);
  std::string text;
  if (io::is_lpa_document(j)) {
    const LPAFunction h = io::lpa_from_json(j);
    for (const auto& p : o.points) text += eval_lpa(h, io::parse_point(p)).to_string() + "\n";
  } else {
    const MinMaxExpr e = io::expr_from_json(j);
    for (const auto& p : o.points) text += eval(e, io::parse_point(p)).to_string() + "\n";
  }
  emit(o, io, text);
  return kExitOk;
}

int do_cells(const Options& o, Io io) {
  const MinMaxExpr e = load_expr(o, io);
  const CellComplex complex = build_complex(e, analysis_box(o, e.dim()), limits_of(o));
  emit(o, io, io::dump(io::to_json(complex)));
  return kExitOk;
}

int do_pairs(const Options& o, Io io) {
  const Json j = load_document(o, io);
  if (io::is_lpa_document(j)) {
    const LPAFunction h = io::lpa_from_json(j);
    emit(o, io,
         io::dump(io::lpa_pairs_to_json(
             lpa_characteristic_pairs(h, radius_or(o, 1), limits_of(o, kFamilyHyperplaneLimit)))));
    return kExitOk;
  }
  const MinMaxExpr e = io::expr_from_json(j);
  const CellComplex complex = build_complex(e, analysis_box(o, e.dim()), limits_of(o));
  emit(o, io, io::dump(io::pairs_to_json(complex, characteristic_pairs(complex))));
  return kExitOk;
}

int do_bump(const Options& o, Io io) {
  if (o.center.empty()) throw Error(ErrorKind::kMalformedInput, "need --center");
  const MinMaxExpr b = bump(io::parse_point(o.center), parse_rational(o.inner, "--inner"),
                            parse_rational(o.outer, "--outer"), parse_rational(o.height, "--height"));
  emit(o, io, io::dump(io::to_json(b)));
  return kExitOk;
}

// Bump of height f(c)/2 on c + rB, r = 2^-j, small enough that f >= f(c)/2 on
// the outer box c + 2rB. It lies below f wherever f is nonnegative.
int do_below(const Options& o, Io io) {
  const MinMaxExpr f = load_expr(o, io);
  if (o.center.empty()) throw Error(ErrorKind::kMalformedInput, "need --center");
  const Point c = io::parse_point(o.center);
  const Rational half = eval(f, c) / 2;
  if (half.sign() <= 0) throw Error(ErrorKind::kNotNonnegative, "f must be positive at the center");
  const Limits limits = limits_of(o);
  Rational r(1);
  for (int j = 0; j < 64; ++j, r /= 2) {
    if (bound_on_box(f, SolidBox(c, r * 2), limits).first >= half) {
      emit(o, io, io::dump(io::to_json(bump(c, r, r * 2, half))));
      return kExitOk;
    }
  }
  throw Error(ErrorKind::kInvalidArgument, "no dyadic radius keeps f above f(c)/2");
}

int do_decompose(const Options& o, Io io) {
  const MinMaxExpr f = load_expr(o, io);
  const std::int64_t radius = radius_or(o, 2);
  TileOptions options;
  options.positive_check = !o.no_positive_check;
  options.certify_radius = o.certify_radius.value_or(radius + 2);
  options.limits = limits_of(o, kFamilyHyperplaneLimit);
  const LPAFunction h = sup_family(tile_decompose(f, options));
  emit(o, io, io::dump(io::to_json(h, radius)));
  return kExitOk;
}

int do_restrict(const Options& o, Io io) {
  const LPAFunction h = load_lpa(o, io);
  const Limits limits = limits_of(o, kFamilyHyperplaneLimit);
  emit(o, io, io::dump(io::to_json(restrict_to_box(h, radius_or(o, 1), limits))));
  return kExitOk;
}

ContinuousOracle oracle_of(const Options& o) {
  if (o.oracle.empty()) throw Error(ErrorKind::kMalformedInput, "need --oracle");
  return make_oracle(o.oracle, o.dim);
}

std::string samples_csv(const ApproxReport& report, std::size_t dim, int precision) {
  std::string text;
  for (std::size_t i = 0; i < dim; ++i) text += "x" + std::to_string(i + 1) + ",";
  text += "f,h,abs_error\n";
  for (const auto& s : report.samples) {
    for (const auto& c : s.x) text += c.to_decimal(precision) + ",";
    text += s.f.to_decimal(precision) + "," + s.h.to_decimal(precision) + "," +
            (s.f - s.h).abs().to_decimal(precision) + "\n";
  }
  return text;
}

int do_approx(const Options& o, Io io) {
  const ContinuousOracle oracle = oracle_of(o);
  const std::int64_t radius = radius_or(o, 1);
  ApproxOptions options;
  options.samples = o.samples;
  options.seed = o.seed;
  options.limits = limits_of(o, kFamilyHyperplaneLimit);
  const UniformApprox result =
      uniform_approx(oracle, parse_rational(o.eps, "--eps"), radius, options);
  if (o.format == "csv") {
    emit(o, io, samples_csv(result.report, oracle.dim, o.precision));
    return kExitOk;
  }
  Json doc = Json::object();
  doc["report"] = io::to_json(result.report);
  doc["function"] = io::to_json(result.h, radius);
  emit(o, io, io::dump(doc));
  return kExitOk;
}

int do_monotone(const Options& o, Io io) {
  const ContinuousOracle oracle = oracle_of(o);
  const Limits limits = limits_of(o, kFamilyHyperplaneLimit);
  const ApproxSequence seq = o.order ? order_approx(oracle, o.count, limits)
                                     : monotone_under_approx(oracle, o.count, limits);
  emit(o, io, io::dump(io::to_json(seq)));
  return kExitOk;
}

int do_sample(const Options& o, Io io) {
  const Json j = load_document(o, io);
  std::optional<LPAFunction> h;
  std::optional<MinMaxExpr> e;
  if (io::is_lpa_document(j)) {
    h = io::lpa_from_json(j);
  } else {
    e = io::expr_from_json(j);
  }
  const std::size_t dim = h ? h->family.dim() : e->dim();
  const SolidBox box = analysis_box(o, dim);
  const Rational step = parse_rational(o.step, "--step");
  if (step.sign() <= 0) throw Error(ErrorKind::kBadStep, "step must be positive");
  const Rational per_axis_q = box.radius() * 2 / step;
  if (!per_axis_q.is_integer()) throw Error(ErrorKind::kBadStep, "step must divide the box edge");
  const std::int64_t per_axis = per_axis_q.floor() + 1;
  const Limits limits = limits_of(o);
  std::size_t total = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    if (total > limits.grid_budget / static_cast<std::size_t>(per_axis)) {
      throw Error(ErrorKind::kGridTooLarge, "sample grid exceeds the grid budget");
    }
    total *= static_cast<std::size_t>(per_axis);
  }
  std::string text;
  for (std::size_t i = 0; i < dim; ++i) text += "x" + std::to_string(i + 1) + ",";
  text += "value\n";
  std::vector<std::int64_t> idx(dim, 0);
  for (std::size_t n = 0; n < total; ++n) {
    Point x(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      x[i] = box.lower(i) + step * Rational(static_cast<long>(idx[i]));
      text += x[i].to_decimal(o.precision) + ",";
    }
    text += (h ? eval_lpa(*h, x) : eval(*e, x)).to_decimal(o.precision) + "\n";
    for (std::size_t i = 0; i < dim; ++i) {
      if (++idx[i] < per_axis) break;
      idx[i] = 0;
    }
  }
  emit(o, io, text);
  return kExitOk;
}

using Checks = std::vector<std::pair<std::string, bool>>;

Checks verify_expr(const MinMaxExpr& e, const Options& o) {
  Checks checks;
  // Restricted families are the usual input here.
  const Limits limits = limits_of(o, kFamilyHyperplaneLimit);
  const std::string once = io::dump(io::to_json(e));
  checks.emplace_back("json_round_trip",
                      io::dump(io::to_json(io::expr_from_json(io::parse(once)))) == once);
  const SolidBox box = o.box.empty() && !o.radius
                           ? SolidBox::omega(e.dim(), 2)
                           : analysis_box(o, e.dim());
  const CellComplex complex = build_complex(e, box, limits);
  checks.emplace_back("max_min_round_trip",
                      semantic_equal(max_min_from_pairs(complex), e, box, limits));
  checks.emplace_back("prune_preserves_values", semantic_equal(prune(e, box), e, box, limits));
  bool witnesses = true;
  for (std::size_t k = 0; k < complex.cells.size(); ++k) {
    const auto& cell = complex.cells[k];
    witnesses = witnesses && box.interior_contains(cell.witness) &&
                eval(e, cell.witness) == eval_affine(complex.components[complex.assignment[k]],
                                                     cell.witness);
  }
  checks.emplace_back("cell_components_match", witnesses);
  return checks;
}

Checks verify_lpa(const LPAFunction& h, const Options& o) {
  Checks checks;
  const Limits limits = limits_of(o, kFamilyHyperplaneLimit);
  const std::int64_t radius = radius_or(o, 1);
  const std::int64_t listed = h.family.metadata().truncation_radius.value_or(radius);
  const std::string once = io::dump(io::to_json(h, listed));
  checks.emplace_back("json_round_trip",
                      io::dump(io::to_json(io::lpa_from_json(io::parse(once)), listed)) == once);
  bool vanish = true;
  bool nonnegative = true;
  auto check_members = [&](const LocallyFiniteFamily& family, bool positive) {
    for (const auto& m : family.listed_members()) {
      vanish = vanish && vanishes_outside_support(m, limits);
      if (positive) nonnegative = nonnegative && bound_on_box(m.expr, m.support, limits).first.sign() >= 0;
    }
  };
  check_members(h.family, h.family.positive());
  if (h.subtracted) check_members(*h.subtracted, true);
  checks.emplace_back("members_vanish_outside_support", vanish);
  checks.emplace_back("positive_members_nonnegative", nonnegative);
  // Support-box arithmetic done directly on the listed supports.
  const SolidBox omega = SolidBox::omega(h.family.dim(), Rational(static_cast<long>(radius)));
  std::size_t meeting = 0;
  for (const auto& m : h.family.listed_members()) {
    bool overlap = true;
    for (std::size_t i = 0; i < omega.dim(); ++i) {
      overlap = overlap && m.support.lower(i) <= omega.upper(i) &&
                omega.lower(i) <= m.support.upper(i);
    }
    meeting += overlap ? 1 : 0;
  }
  checks.emplace_back("locally_finite_count", verify_locally_finite(h.family, radius) == meeting);
  checks.emplace_back("restriction_coherent",
                      semantic_equal(restrict_to_box(h, radius, limits),
                                     restrict_to_box(h, radius + 1, limits), omega, limits));
  return checks;
}

Checks verify_complex(const Json& j) {
  Checks checks;
  const CellComplex complex = io::complex_from_json(j);
  const std::string once = io::dump(io::to_json(complex));
  checks.emplace_back("json_round_trip",
                      io::dump(io::to_json(io::complex_from_json(io::parse(once)))) == once);
  bool interior = true;
  for (const auto& cell : complex.cells) {
    for (const auto& g : cell.constraints) interior = interior && eval_affine(g, cell.witness).sign() > 0;
  }
  checks.emplace_back("witnesses_interior", interior);
  std::set<std::string> signs;
  for (const auto& cell : complex.cells) signs.insert(cell.signs);
  checks.emplace_back("sign_vectors_distinct", signs.size() == complex.cells.size());
  return checks;
}

int do_verify(const Options& o, Io io) {
  const Json j = load_document(o, io);
  Checks checks;
  std::string kind;
  if (io::is_lpa_document(j)) {
    kind = "family";
    checks = verify_lpa(io::lpa_from_json(j), o);
  } else if (j.is_object() && j.contains("cells") && j.contains("hyperplanes")) {
    kind = "complex";
    checks = verify_complex(j);
  } else {
    kind = "expr";
    checks = verify_expr(io::expr_from_json(j), o);
  }
  bool passed = true;
  Json list = Json::array();
  for (const auto& [name, ok] : checks) {
    Json item = Json::object();
    item["name"] = name;
    item["passed"] = ok;
    list.push_back(std::move(item));
    passed = passed && ok;
  }
  Json doc = Json::object();
  doc["artifact"] = kind;
  doc["checks"] = std::move(list);
  doc["passed"] = passed;
  emit(o, io, io::dump(doc));
  return passed ? kExitOk : kExitDomainError;
}

void write_error(std::ostream& err, const std::string& kind, const std::string& detail) {
  Json doc = Json::object();
  doc["error"] = kind;
  doc["detail"] = detail;
  err << doc.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Exact piecewise affine and locally piecewise affine functions", "pa"};
  app.require_subcommand(1);

  auto input = [&](CLI::App* sub) {
    sub->add_option("--expr", o.expr, "expression or function file ('-' for stdin)");
    sub->add_option("--family", o.family, "family file ('-' for stdin)");
  };
  auto output = [&](CLI::App* sub) { sub->add_option("--out", o.out, "write output here"); };
  auto limits = [&](CLI::App* sub) {
    sub->add_option("--hyperplane-limit", o.hyperplane_limit, "maximum induced hyperplanes");
  };
  auto region = [&](CLI::App* sub) {
    sub->add_option("--box", o.box, "analysis box \"center;radius\"");
    sub->add_option("--radius", o.radius, "use Omega_n");
  };

  auto* eval_cmd = app.add_subcommand("eval", "evaluate at points");
  input(eval_cmd);
  output(eval_cmd);
  eval_cmd->add_option("--point", o.points, "comma-separated rationals")->required();

  auto* cells_cmd = app.add_subcommand("cells", "cells and assigned components");
  input(cells_cmd);
  output(cells_cmd);
  region(cells_cmd);
  limits(cells_cmd);

  auto* pairs_cmd = app.add_subcommand("pairs", "characteristic pairs");
  input(pairs_cmd);
  output(pairs_cmd);
  region(pairs_cmd);
  limits(pairs_cmd);

  auto* bump_cmd = app.add_subcommand("bump", "bump function");
  output(bump_cmd);
  bump_cmd->add_option("--center", o.center, "comma-separated rationals")->required();
  bump_cmd->add_option("--inner", o.inner, "inner radius");
  bump_cmd->add_option("--outer", o.outer, "outer radius");
  bump_cmd->add_option("--height", o.height, "height");

  auto* below_cmd = app.add_subcommand("below", "positive bump below f around a point");
  input(below_cmd);
  output(below_cmd);
  limits(below_cmd);
  below_cmd->add_option("--center", o.center, "point where f is positive")->required();

  auto* decompose_cmd = app.add_subcommand("decompose", "box-tiled family of a nonnegative expression");
  input(decompose_cmd);
  output(decompose_cmd);
  limits(decompose_cmd);
  decompose_cmd->add_option("--radius", o.radius, "list anchors up to this max-norm (default 2)");
  decompose_cmd->add_option("--certify-radius", o.certify_radius,
                            "check nonnegativity on Omega_N (default radius + 2)");
  decompose_cmd->add_flag("--no-positive-check", o.no_positive_check, "skip the nonnegativity check");

  auto* restrict_cmd = app.add_subcommand("restrict", "expression equal to a family on Omega_n");
  input(restrict_cmd);
  output(restrict_cmd);
  limits(restrict_cmd);
  restrict_cmd->add_option("--radius", o.radius, "n (default 1)");

  auto oracle_opts = [&](CLI::App* sub) {
    sub->add_option("--oracle", o.oracle, "abs, min-abs-1, quadratic, pyramid, poly:c0,c1,..., const:c")
        ->required();
    sub->add_option("--dim", o.dim, "dimension (default 1)");
  };

  auto* approx_cmd = app.add_subcommand("approx", "uniform LPA approximation");
  output(approx_cmd);
  limits(approx_cmd);
  oracle_opts(approx_cmd);
  approx_cmd->add_option("--eps", o.eps, "target uniform error")->required();
  approx_cmd->add_option("--radius", o.radius, "anchor radius (default 1)");
  approx_cmd->add_option("--samples", o.samples, "validation samples (default 500)");
  approx_cmd->add_option("--seed", o.seed, "sampling seed");
  approx_cmd->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  approx_cmd->add_option("--precision", o.precision, "significant digits in csv");

  auto* monotone_cmd = app.add_subcommand("monotone", "increasing PA under-approximations");
  output(monotone_cmd);
  limits(monotone_cmd);
  oracle_opts(monotone_cmd);
  monotone_cmd->add_option("--count", o.count, "number of terms (default 3)");
  monotone_cmd->add_flag("--order", o.order, "approximate f = f+ - f- instead");

  auto* sample_cmd = app.add_subcommand("sample", "values on a grid as CSV");
  input(sample_cmd);
  output(sample_cmd);
  region(sample_cmd);
  sample_cmd->add_option("--step", o.step, "grid pitch")->required();
  sample_cmd->add_option("--precision", o.precision, "significant digits (default 12)");
  sample_cmd->add_option("--format", o.format, "csv")->check(CLI::IsMember({"csv"}));

  auto* verify_cmd = app.add_subcommand("verify", "check the invariants of an artifact");
  input(verify_cmd);
  output(verify_cmd);
  region(verify_cmd);
  limits(verify_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    write_error(err, "MalformedInput", e.what());
    return kExitMalformed;
  }

  const Io io{in, out};
  try {
    if (*eval_cmd) return do_eval(o, io);
    if (*cells_cmd) return do_cells(o, io);
    if (*pairs_cmd) return do_pairs(o, io);
    if (*bump_cmd) return do_bump(o, io);
    if (*below_cmd) return do_below(o, io);
    if (*decompose_cmd) return do_decompose(o, io);
    if (*restrict_cmd) return do_restrict(o, io);
    if (*approx_cmd) return do_approx(o, io);
    if (*monotone_cmd) return do_monotone(o, io);
    if (*sample_cmd) return do_sample(o, io);
    if (*verify_cmd) return do_verify(o, io);
  } catch (const Error& e) {
    write_error(err, std::string(error_kind_name(e.kind())), e.detail());
    return e.kind() == ErrorKind::kMalformedInput ? kExitMalformed : kExitDomainError;
  }
  return kExitMalformed;
}

}  // namespace pa::cli
