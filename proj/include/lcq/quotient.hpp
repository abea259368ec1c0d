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

#ifndef LCQ_QUOTIENT_HPP
#define LCQ_QUOTIENT_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lcq/domain.hpp"
#include "lcq/error.hpp"
#include "lcq/generator.hpp"
#include "lcq/rng.hpp"
#include "lcq/sampling.hpp"

namespace lcq {

// A generator together with the arity of its quotient.
class QuotientSpec {
 public:
  QuotientSpec(Generator f, int k) : f_(std::move(f)), k_(k) {
    if (k_ < 2) throw ArityError("quotient arity must be >= 2, got " + std::to_string(k_));
  }

  const Generator& generator() const noexcept { return f_; }
  int arity() const noexcept { return k_; }

 private:
  Generator f_;
  int k_;
};

// (f(x_1) + ... + f(x_k)) / f(x_1 ... x_k).
//
// The product enters only through its logarithm, via the generator's
// log-argument entry point. If the denominator under- or overflows and the
// generator exposes log|f|, the ratio is formed in log space instead.
inline double quotient_eval(const QuotientSpec& spec, const MeanPoint& point) {
  const Generator& f = spec.generator();
  if (point.domain() != f.domain()) {
    throw DomainError("point domain " + std::string(name(point.domain())) +
                      " does not match generator domain " +
                      std::string(name(f.domain())));
  }
  if (static_cast<int>(point.arity()) != spec.arity()) {
    throw ArityError("quotient of arity " + std::to_string(spec.arity()) +
                     " evaluated at a point of arity " +
                     std::to_string(point.arity()));
  }
  double numerator = 0.0;
  double log_product = 0.0;
  for (double x : point.values()) {
    numerator += f(x);
    log_product += std::log(x);
  }
  double value = std::numeric_limits<double>::quiet_NaN();
  const double denominator = f.at_log(log_product);
  if (std::isnormal(denominator)) {
    value = numerator / denominator;
  } else if (f.has_log_abs_entry() && numerator != 0.0 && std::isfinite(numerator)) {
    const bool same_sign = (numerator > 0.0) == (f.sign() == Sign::Positive);
    value = std::exp(std::log(std::abs(numerator)) - f.log_abs_at_log(log_product));
    if (!same_sign) value = -value;
  }
  if (!std::isfinite(value) || value == 0.0) {
    throw EvaluationError("quotient of '" + f.label() + "' is not finite (f(product) = " +
                          std::to_string(denominator) + ")");
  }
  if (value < 0.0) {
    throw EvaluationError("quotient of '" + f.label() +
                          "' is negative; the generator changes sign");
  }
  return value;
}

// 1 + 2^-j for j = 10..40 above one, 1 - 2^-j below one.
inline std::vector<double> default_probe_points(Domain domain) {
  std::vector<double> pts;
  for (int j = 10; j <= 40; ++j) {
    const double step = std::ldexp(1.0, -j);
    pts.push_back(domain == Domain::UnitInterval ? 1.0 - step : 1.0 + step);
  }
  return pts;
}

// Estimate of lim_{x -> 1} g(x) / f(x) along `probe_points`. The estimate is
// the last ratio, accepted only if the last three ratios agree to 1e-8
// relative; otherwise the limit is reported absent.
inline std::optional<double> proportionality_constant(
    const Generator& f, const Generator& g, std::span<const double> probe_points) {
  if (probe_points.size() < 3) {
    throw ParameterError("proportionality probe needs at least 3 points");
  }
  std::vector<double> ratios;
  ratios.reserve(probe_points.size());
  for (double x : probe_points) {
    const double fx = f(x);
    if (fx == 0.0 || !std::isfinite(fx)) {
      throw EvaluationError("f vanishes or is not finite at probe point " +
                            std::to_string(x));
    }
    ratios.push_back(g(x) / fx);
  }
  const std::size_t n = ratios.size();
  const double last = ratios[n - 1];
  if (!std::isfinite(last)) return std::nullopt;
  const double scale = 1e-8 * std::abs(last);
  if (std::abs(ratios[n - 1] - ratios[n - 2]) <= scale &&
      std::abs(ratios[n - 2] - ratios[n - 3]) <= scale) {
    return last;
  }
  return std::nullopt;
}

inline std::optional<double> proportionality_constant(const Generator& f,
                                                       const Generator& g) {
  const auto pts = default_probe_points(f.domain());
  return proportionality_constant(f, g, pts);
}

struct EqualityReport {
  bool equal = false;
  // max |L_g - L_f| / |L_f| over the successful samples
  double max_residual = 0.0;
  std::vector<double> witness;
  std::size_t samples = 0;
  std::size_t failed_evaluations = 0;
  // lim g/f at 1, if it stabilizes
  std::optional<double> constant;
  // constant found and g = constant * f on every sampled coordinate
  bool proportional = false;
  // equal and proportional agree, as the biconditional demands
  bool consistent = false;
};

// Sampling-based test of L_{f,k} == L_{g,k}, cross-checked against the
// proportionality g = c f.
inline EqualityReport quotient_equal(const Generator& f, const Generator& g, int k,
                                     std::size_t sample_count, std::uint64_t seed,
                                     double tol) {
  if (f.domain() != g.domain()) throw DomainError("generators live on different domains");
  const QuotientSpec qf(f, k);
  const QuotientSpec qg(g, k);

  EqualityReport report;
  report.samples = sample_count;
  std::size_t succeeded = 0;
  double max_pointwise = 0.0;

  try {
    report.constant = proportionality_constant(f, g);
  } catch (const Error&) {
    report.constant.reset();
  }

  for (std::uint64_t i = 0; i < sample_count; ++i) {
    SampleStream rng(seed, i);
    auto tuple = sample_tuple(f.domain(), static_cast<std::size_t>(k), rng, shape_for(i));
    try {
      const MeanPoint point(tuple, f.domain());
      const double lf = quotient_eval(qf, point);
      const double lg = quotient_eval(qg, point);
      const double rel = std::abs(lg - lf) / std::abs(lf);
      ++succeeded;
      if (rel > report.max_residual || report.witness.empty()) {
        report.max_residual = rel;
        report.witness = tuple;
      }
      if (report.constant) {
        for (double x : tuple) {
          const double cf = *report.constant * f(x);
          max_pointwise = std::max(max_pointwise, std::abs(g(x) - cf) / std::abs(cf));
        }
      }
    } catch (const Error&) {
      ++report.failed_evaluations;
    }
  }

  report.equal = succeeded > 0 && report.max_residual < tol;
  report.proportional = report.constant.has_value() && succeeded > 0 && max_pointwise < tol;
  report.consistent = report.equal == report.proportional;
  return report;
}

}  // namespace lcq

#endif  // LCQ_QUOTIENT_HPP
