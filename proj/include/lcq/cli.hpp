// Copyright 2026 The lcq Authors
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

#ifndef LCQ_CLI_HPP
#define LCQ_CLI_HPP

#include <cstdint>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lcq/analysis.hpp"
#include "lcq/domain.hpp"
#include "lcq/dynamics.hpp"
#include "lcq/error.hpp"
#include "lcq/format.hpp"
#include "lcq/funceq.hpp"
#include "lcq/generator.hpp"
#include "lcq/means.hpp"
#include "lcq/properties.hpp"
#include "lcq/quotient.hpp"
#include "lcq/rng.hpp"

// Command-line front end. Exit codes follow sysexits: 0 success, 2 failed
// check, 64 usage, 65 bad data, 70 internal evaluation error.
namespace lcq::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 2,
  kUsage = 64,
  kDataError = 65,
  kSoftware = 70,
};

using Json = nlohmann::ordered_json;

// Raised for malformed flag values; maps to exit 64.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Raised for unusable input files; maps to exit 65.
class DataError : public Error {
 public:
  using Error::Error;
};

// Loads a table and builds its extension, reporting bad contents as data errors.
inline TiledExtension load_extension(const std::string& path, double p, int k) {
  const auto table = load_table_csv(path);
  try {
    return TiledExtension(p, k, table);
  } catch (const ParameterError& e) {
    throw DataError(path + ": " + e.what());
  }
}

inline std::vector<double> parse_list(std::string_view text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    try {
      out.push_back(lcq::detail::parse_real(piece, 0, "number"));
    } catch (const ParseError& e) {
      throw UsageError(std::string(e.what()) + " in list '" + std::string(text) + "'");
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

namespace detail {

inline std::map<std::string, std::string> parse_params(std::string_view body,
                                                       std::string_view spec) {
  std::map<std::string, std::string> params;
  std::size_t start = 0;
  while (start < body.size()) {
    auto comma = body.find(',', start);
    if (comma == std::string_view::npos) comma = body.size();
    const auto item = body.substr(start, comma - start);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw UsageError("malformed parameter '" + std::string(item) + "' in '" +
                       std::string(spec) + "'");
    }
    params[std::string(item.substr(0, eq))] = std::string(item.substr(eq + 1));
    start = comma + 1;
  }
  return params;
}

inline double take_real(std::map<std::string, std::string>& params, const std::string& key,
                        std::string_view spec) {
  const auto it = params.find(key);
  if (it == params.end()) {
    throw UsageError("missing parameter '" + key + "' in '" + std::string(spec) + "'");
  }
  double v;
  try {
    v = lcq::detail::parse_real(it->second, 0, key.c_str());
  } catch (const ParseError& e) {
    throw UsageError(std::string(e.what()) + " in '" + std::string(spec) + "'");
  }
  params.erase(it);
  return v;
}

inline void require_empty(const std::map<std::string, std::string>& params,
                          std::string_view spec) {
  if (!params.empty()) {
    throw UsageError("unknown parameter '" + params.begin()->first + "' in '" +
                     std::string(spec) + "'");
  }
}

}  // namespace detail

// Generator spec grammar:
//   canonical:c=<real>,k=<int>
//   powerlog:c=<real>,alpha=<real>
//   affine:a=<real>,b=<real>
//   table:<path>     (f0 on [p, p^k) with p the first abscissa; uses `k`)
inline Generator parse_generator(std::string_view spec, int k, Domain domain) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw UsageError("generator spec needs 'kind:params', got '" + std::string(spec) + "'");
  }
  const auto kind = spec.substr(0, colon);
  const auto body = spec.substr(colon + 1);
  if (kind == "table") {
    if (domain != Domain::AboveOne) throw UsageError("table generators live on above-one");
    const std::string path(body);
    const auto table = load_table_csv(path);
    return as_generator(load_extension(path, table.abscissae().front(), k),
                        "table(" + path + ")");
  }
  try {
    auto params = detail::parse_params(body, spec);
    if (kind == "canonical") {
      const double c = detail::take_real(params, "c", spec);
      const double kk = detail::take_real(params, "k", spec);
      detail::require_empty(params, spec);
      if (kk != std::floor(kk) || kk < 2 || kk > 1e6) throw UsageError("canonical needs integer k >= 2");
      return canonical_generator(c, static_cast<int>(kk), domain);
    }
    if (kind == "powerlog") {
      const double c = detail::take_real(params, "c", spec);
      const double alpha = detail::take_real(params, "alpha", spec);
      detail::require_empty(params, spec);
      return power_log_generator(c, alpha, domain);
    }
    if (kind == "affine") {
      const double a = detail::take_real(params, "a", spec);
      const double b = detail::take_real(params, "b", spec);
      detail::require_empty(params, spec);
      return affine_generator(a, b, domain);
    }
  } catch (const ParameterError& e) {
    throw UsageError(e.what());
  }
  throw UsageError("unknown generator kind '" + std::string(kind) +
                   "' (expected canonical, powerlog, affine or table)");
}

// Test functions for the Jensen suite: affine:a=,b= | power:p= | exp.
inline std::function<double(double)> parse_real_function(std::string_view spec) {
  if (spec == "exp") return [](double s) { return std::exp(s); };
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw UsageError("malformed function spec '" + std::string(spec) + "'");
  const auto kind = spec.substr(0, colon);
  auto params = detail::parse_params(spec.substr(colon + 1), spec);
  if (kind == "affine") {
    const double a = detail::take_real(params, "a", spec);
    const double b = detail::take_real(params, "b", spec);
    detail::require_empty(params, spec);
    return [a, b](double s) { return a * s + b; };
  }
  if (kind == "power") {
    const double p = detail::take_real(params, "p", spec);
    detail::require_empty(params, spec);
    return [p](double s) { return std::pow(s, p); };
  }
  throw UsageError("unknown function kind '" + std::string(kind) + "' (expected affine, power or exp)");
}

namespace detail {

inline Json number(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

inline Json numbers(const std::vector<double>& vs) {
  Json arr = Json::array();
  for (double v : vs) arr.push_back(number(v));
  return arr;
}

inline std::string plain_scalar(const Json& v) {
  if (v.is_number_float()) return format_double(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ',';
      s += plain_scalar(v[i]);
    }
    return s;
  }
  return v.dump();
}

// Plain output: one "key value" line per leaf, nested keys joined by '.'.
inline void emit_plain(std::ostream& out, const Json& doc, const std::string& prefix) {
  for (const auto& [key, value] : doc.items()) {
    const std::string path = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      emit_plain(out, value, path);
    } else {
      out << path << ' ' << plain_scalar(value) << '\n';
    }
  }
}

inline void emit(std::ostream& out, const Json& doc, const std::string& format) {
  if (format == "plain") {
    emit_plain(out, doc, "");
    return;
  }
  out << doc.dump() << '\n';
}

inline MeanFunction mean_by_name(const std::string& key) {
  if (key == "Lk") return [](std::span<const double> v) { return log_cauchy_mean(v); };
  if (key == "Ext") return [](std::span<const double> v) { return extended_mean(v); };
  if (key == "Linv") {
    return involutory_conjugate([](std::span<const double> v) { return log_cauchy_mean(v); },
                                Domain::Positive);
  }
  if (key == "G") return [](std::span<const double> v) { return geometric_mean(v); };
  throw UsageError("unknown mean '" + key + "' (expected Lk, Ext, Linv or G)");
}

struct Options {
  std::string format = "json";

  // eval / quotient
  std::string mean;
  int k = 2;
  std::string point;
  std::string gen;
  std::string gen2;
  std::string domain = "above-one";

  // extend
  double p = 0.0;
  std::string table;
  std::string at;

  // check
  std::string suite;
  std::uint64_t seed = 1;
  std::size_t samples = 1000;
  double tol = -1.0;
  double lo = -3.0;
  double hi = 3.0;
  double delta = 1e-3;
  std::string expect = "concave";
  double c = 1.0;
  double r = 0.5;
  std::string fn = "affine:a=3,b=1";

  // iterate
  std::string m1;
  std::string m2;
  std::string start;
  double iter_tol = 1e-12;
  std::size_t max_iter = 200;
  std::string trace;
  std::string reference = "G";
  bool relative_gap = false;
};

inline std::vector<double> point_of_arity(const Options& o) {
  auto v = parse_list(o.point);
  if (static_cast<int>(v.size()) != o.k) {
    throw ArityError("--point has " + std::to_string(v.size()) + " coordinates but --k is " +
                     std::to_string(o.k));
  }
  return v;
}

inline Generator default_or_parsed(const Options& o, Domain domain) {
  if (o.gen.empty()) return canonical_generator(domain == Domain::UnitInterval ? -1.0 : 1.0, o.k, domain);
  return parse_generator(o.gen, o.k, domain);
}

inline int run_eval(const Options& o, std::ostream& out) {
  const auto mean = mean_by_name(o.mean);
  const auto point = point_of_arity(o);
  const MeanReport rep = evaluate(mean, point);
  Json doc;
  doc["mean"] = o.mean;
  doc["k"] = o.k;
  doc["point"] = numbers(point);
  doc["value"] = number(rep.value);
  doc["min"] = number(rep.min);
  doc["max"] = number(rep.max);
  doc["strict"] = rep.strict;
  doc["residuals"] = {{"lower_margin", number(rep.value - rep.min)},
                      {"upper_margin", number(rep.max - rep.value)}};
  doc["verdict"] = !rep.within_bounds() ? "outside-bounds" : rep.strict ? "strict" : "within-bounds";
  emit(out, doc, o.format);
  return kOk;
}

inline int run_quotient(const Options& o, std::ostream& out) {
  const Domain domain = parse_domain(o.domain);
  const Generator f = parse_generator(o.gen, o.k, domain);
  const MeanPoint point(point_of_arity(o), domain);
  const double value = quotient_eval(QuotientSpec(f, o.k), point);
  Json doc;
  doc["generator"] = f.label();
  doc["k"] = o.k;
  doc["point"] = numbers({point.values().begin(), point.values().end()});
  doc["value"] = number(value);
  doc["min"] = number(point.min());
  doc["max"] = number(point.max());
  doc["residuals"] = {{"lower_margin", number(value - point.min())},
                      {"upper_margin", number(point.max() - value)}};
  doc["verdict"] = (point.min() <= value && value <= point.max()) ? "within-bounds" : "outside-bounds";
  emit(out, doc, o.format);
  return kOk;
}

inline int run_extend(const Options& o, std::ostream& out) {
  const TiledExtension ext = load_extension(o.table, o.p, o.k);
  const auto at = parse_list(o.at);
  std::vector<double> values, residuals;
  Json tiles = Json::array();
  for (double x : at) {
    values.push_back(extend(ext, x));
    tiles.push_back(tile_index(x, ext.p(), ext.k()));
    residuals.push_back(reflexivity_residual(ext, x));
  }
  const auto cont = continuity_defect(ext);
  Json doc;
  doc["p"] = o.p;
  doc["k"] = o.k;
  doc["at"] = numbers(at);
  doc["value"] = numbers(values);
  doc["tiles"] = tiles;
  doc["residuals"] = {{"continuity_defect", cont.defect ? number(*cont.defect) : Json(nullptr)},
                      {"reflexivity", numbers(residuals)}};
  doc["verdict"] = !cont.defect ? "indeterminate" : cont.continuous() ? "continuous" : "discontinuous";
  if (!cont.note.empty()) doc["note"] = cont.note;
  emit(out, doc, o.format);
  return kOk;
}

inline Json witness(const std::optional<std::vector<double>>& w) {
  return w ? numbers(*w) : Json(nullptr);
}

inline int run_check(const Options& o, std::ostream& out) {
  Json doc;
  doc["suite"] = o.suite;
  doc["seed"] = o.seed;
  doc["samples"] = o.samples;
  bool pass = false;
  double headline = 0.0;
  Json residuals = Json::object();
  auto tol_or = [&](double d) { return o.tol > 0.0 ? o.tol : d; };

  if (o.suite == "mean-props") {
    const Domain domain = parse_domain(o.domain);
    const double tol = tol_or(1e-12);
    const auto rep = probe_mean_properties(mean_by_name(o.mean.empty() ? "Lk" : o.mean), domain,
                                           static_cast<std::size_t>(o.k), o.samples, o.seed);
    residuals["failed_evaluations"] = rep.failed_evaluations;
    residuals["bounds_violations"] = rep.bounds_violations;
    residuals["max_bounds_violation"] = number(rep.max_bounds_violation);
    residuals["max_reflexivity_residual"] = number(rep.max_reflexivity_residual);
    residuals["strictness_checked"] = rep.strictness_checked;
    residuals["strictness_witness"] = witness(rep.strictness_witness);
    residuals["strictness_counterexample"] = witness(rep.strictness_counterexample);
    residuals["max_symmetry_residual"] = number(rep.max_symmetry_residual);
    residuals["homogeneity_residual"] = number(rep.homogeneity.residual);
    residuals["translativity_residual"] = number(rep.translativity.residual);
    residuals["monotonicity_violations"] = rep.monotonicity_violations;
    headline = rep.max_bounds_violation;
    pass = rep.failed_evaluations == 0 && rep.is_mean() && rep.is_strict() &&
           rep.strictness_checked > 0 &&
           rep.max_reflexivity_residual < tol && rep.max_symmetry_residual < 1e-13;
  } else if (o.suite == "reflexivity") {
    const double tol = tol_or(1e-12);
    const Generator f = default_or_parsed(o, Domain::AboveOne);
    double worst = 0.0, worst_x = 0.0;
    for (std::uint64_t i = 0; i < o.samples; ++i) {
      SampleStream rng(o.seed, i);
      const double x = std::exp(sample_log_magnitude(rng, 1e-6, std::log(1e6)));
      const double rel = std::abs(reflexivity_residual(f, x, o.k)) / std::abs(f(x));
      if (!(rel <= worst)) {
        worst = rel;
        worst_x = x;
      }
    }
    residuals["max_relative_residual"] = number(worst);
    residuals["witness"] = number(worst_x);
    headline = worst;
    pass = worst < tol;
  } else if (o.suite == "equality") {
    if (o.gen2.empty()) throw UsageError("suite equality needs --gen2");
    const Domain domain = parse_domain(o.domain);
    const Generator f = default_or_parsed(o, domain);
    const Generator g = parse_generator(o.gen2, o.k, domain);
    const auto rep = quotient_equal(f, g, o.k, o.samples, o.seed, tol_or(1e-9));
    residuals["max_relative_residual"] = number(rep.max_residual);
    residuals["witness"] = numbers(rep.witness);
    residuals["failed_evaluations"] = rep.failed_evaluations;
    residuals["proportionality_constant"] = rep.constant ? number(*rep.constant) : Json(nullptr);
    residuals["proportional"] = rep.proportional;
    residuals["consistent"] = rep.consistent;
    headline = rep.max_residual;
    pass = rep.equal && rep.consistent;
  } else if (o.suite == "krull") {
    const double tol = tol_or(1e-12);
    const auto h = h_transform(default_or_parsed(o, Domain::AboveOne));
    double worst = 0.0, worst_tau = 0.0;
    for (std::uint64_t i = 0; i < o.samples; ++i) {
      SampleStream rng(o.seed, i);
      const double tau = rng.uniform(-5.0, 5.0);
      const double res = std::abs(krull_residual(h, tau, o.k));
      if (!(res <= worst)) {
        worst = res;
        worst_tau = tau;
      }
    }
    residuals["max_abs_residual"] = number(worst);
    residuals["witness_tau"] = number(worst_tau);
    headline = worst;
    pass = worst < tol;
  } else if (o.suite == "concavity") {
    const auto h = h_transform(default_or_parsed(o, Domain::AboveOne));
    const auto rep = concavity_probe(h, o.lo, o.hi, o.samples, o.delta);
    residuals["min_second_difference"] = number(rep.min_second_difference);
    residuals["max_second_difference"] = number(rep.max_second_difference);
    residuals["tolerance"] = number(rep.tolerance);
    residuals["curvature"] = name(rep.verdict);
    headline = rep.verdict == Curvature::Convex ? rep.min_second_difference : rep.max_second_difference;
    pass = o.expect == name(rep.verdict);
  } else if (o.suite == "phi") {
    const auto rep = phi_probe(default_or_parsed(o, Domain::AboveOne), o.c, o.r, o.samples);
    residuals["tail_value"] = number(rep.tail_value);
    residuals["median_abs"] = number(rep.median_abs);
    residuals["tail_max_abs"] = number(rep.tail_max_abs);
    headline = rep.tail_value;
    pass = rep.bounded;
  } else if (o.suite == "jensen") {
    const double tol = tol_or(1e-12);
    const auto h = parse_real_function(o.fn);
    double worst = 0.0;
    for (std::uint64_t i = 0; i < o.samples; ++i) {
      SampleStream rng(o.seed, i);
      const std::size_t k = 2 + rng.below(5);
      std::vector<double> pts(k);
      for (auto& s : pts) s = rng.uniform(-5.0, 5.0);
      const double res = std::abs(jensen_residual(h, pts));
      if (!(res <= worst)) worst = res;
    }
    residuals["max_abs_residual"] = number(worst);
    headline = worst;
    pass = worst < tol;
  } else {
    throw UsageError("unknown suite '" + o.suite + "'");
  }
  doc["value"] = number(headline);
  doc["residuals"] = residuals;
  doc["verdict"] = pass ? "pass" : "fail";
  emit(out, doc, o.format);
  return pass ? kOk : kCheckFailed;
}

inline int run_iterate(const Options& o, std::ostream& out) {
  const auto m1 = catalog_mean(o.m1);
  const auto m2 = catalog_mean(o.m2);
  const auto ref = catalog_mean(o.reference);
  const auto start = parse_list(o.start);
  if (start.size() != 2) throw UsageError("--start needs exactly two numbers x,y");
  const auto trace = iterate_pair(m1, m2, start[0], start[1], ref,
                                  {o.iter_tol, o.max_iter, o.relative_gap});
  if (!o.trace.empty()) {
    std::ofstream file(o.trace, std::ios::binary);
    if (!file) throw DomainError("cannot open trace file '" + o.trace + "'");
    write_trace_csv(file, trace);
  }
  if (o.format == "csv") {
    write_trace_csv(out, trace);
  } else {
    Json doc;
    doc["m1"] = o.m1;
    doc["m2"] = o.m2;
    doc["start"] = numbers(start);
    doc["value"] = trace.limit ? number(*trace.limit) : Json(nullptr);
    doc["iterations"] = trace.iterations_used;
    doc["residuals"] = {{"max_invariance_residual", number(trace.max_abs_invariance_residual())},
                        {"final_gap", number(trace.steps.back().gap)}};
    doc["gap_monotone"] = trace.gap_monotone;
    doc["verdict"] = trace.error ? "error" : trace.limit ? "converged" : "not-converged";
    if (trace.error) doc["error"] = *trace.error;
    emit(out, doc, o.format);
  }
  return trace.error ? kDataError : kOk;
}

}  // namespace detail

// Runs one command. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  detail::Options o;
  CLI::App app{"Logarithmic Cauchy quotient means: evaluation, extension, checks, iteration", "lcq"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "plain", "csv"}));

  auto* eval = app.add_subcommand("eval", "Evaluate a mean at a point");
  eval->add_option("--mean", o.mean, "Lk, Ext, Linv or G")->required()
      ->check(CLI::IsMember({"Lk", "Ext", "Linv", "G"}));
  eval->add_option("--k", o.k, "Arity")->required()->check(CLI::Range(2, 1 << 20));
  eval->add_option("--point", o.point, "x1,...,xk")->required();

  auto* quot = app.add_subcommand("quotient", "Evaluate the logarithmic Cauchy quotient");
  quot->add_option("--gen", o.gen, "Generator spec")->required();
  quot->add_option("--k", o.k, "Arity")->required()->check(CLI::Range(2, 1 << 20));
  quot->add_option("--point", o.point, "x1,...,xk")->required();
  quot->add_option("--domain", o.domain, "above-one, unit or positive")
      ->check(CLI::IsMember({"above-one", "unit", "positive"}));

  auto* ext = app.add_subcommand("extend", "Extend tabulated f0 from [p, p^k)");
  ext->add_option("--p", o.p, "Base point p > 1")->required();
  ext->add_option("--k", o.k, "Exponent k")->required()->check(CLI::Range(2, 1 << 20));
  ext->add_option("--table", o.table, "CSV file with header x,f")->required();
  ext->add_option("--at", o.at, "x1[,x2,...]")->required();

  auto* check = app.add_subcommand("check", "Run a property suite");
  check->add_option("--suite", o.suite, "Suite name")->required()->check(CLI::IsMember(
      {"mean-props", "reflexivity", "equality", "krull", "concavity", "phi", "jensen"}));
  check->add_option("--seed", o.seed, "64-bit seed");
  check->add_option("--samples", o.samples, "Sample count")->check(CLI::Range(std::size_t{1}, std::size_t{100000000}));
  check->add_option("--k", o.k, "Arity")->check(CLI::Range(2, 1 << 20));
  check->add_option("--mean", o.mean, "mean-props: Lk, Ext, Linv or G")
      ->check(CLI::IsMember({"Lk", "Ext", "Linv", "G"}));
  check->add_option("--domain", o.domain, "mean-props, equality: domain")
      ->check(CLI::IsMember({"above-one", "unit", "positive"}));
  check->add_option("--gen", o.gen, "Generator spec (default canonical)");
  check->add_option("--gen2", o.gen2, "equality: second generator spec");
  check->add_option("--tol", o.tol, "Tolerance override");
  check->add_option("--lo", o.lo, "concavity: grid start");
  check->add_option("--hi", o.hi, "concavity: grid end");
  check->add_option("--delta", o.delta, "concavity: step");
  check->add_option("--expect", o.expect, "concavity: expected curvature")
      ->check(CLI::IsMember({"concave", "convex", "linear", "neither"}));
  check->add_option("--c", o.c, "phi: slope c > 0");
  check->add_option("--r", o.r, "phi: window radius");
  check->add_option("--fn", o.fn, "jensen: affine:a=,b= | power:p= | exp");

  auto* iter = app.add_subcommand("iterate", "Iterate a mean-type mapping");
  iter->add_option("--m1", o.m1, "First mean")->required();
  iter->add_option("--m2", o.m2, "Second mean")->required();
  iter->add_option("--start", o.start, "x,y")->required();
  iter->add_option("--tol", o.iter_tol, "Gap tolerance");
  iter->add_option("--max-iter", o.max_iter, "Iteration cap");
  iter->add_option("--trace", o.trace, "Write trace CSV here");
  iter->add_option("--reference", o.reference, "Reference mean for invariance residuals");
  iter->add_flag("--relative-gap", o.relative_gap, "Stop on the relative gap");

  std::vector<const char*> argv{"lcq"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (*eval) return detail::run_eval(o, out);
    if (*quot) return detail::run_quotient(o, out);
    if (*ext) return detail::run_extend(o, out);
    if (*check) return detail::run_check(o, out);
    if (*iter) return detail::run_iterate(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << " (value " << format_double(e.offending()) << ")\n";
    return kDataError;
  } catch (const InterpolationError& e) {
    err << "domain error: " << e.what() << " (value " << format_double(e.at()) << ")\n";
    return kDataError;
  } catch (const RangeError& e) {
    err << "domain error: " << e.what() << " (tile " << e.tile() << ")\n";
    return kDataError;
  } catch (const ArityError& e) {
    err << "domain error: " << e.what() << '\n';
    return kDataError;
  } catch (const ParseError& e) {
    err << "data error: " << e.what() << '\n';
    return kDataError;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << '\n';
    return kDataError;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  } catch (const Error& e) {
    err << "evaluation error: " << e.what() << '\n';
    return kSoftware;
  }
  return kUsage;
}

}  // namespace lcq::cli

#endif  // LCQ_CLI_HPP
