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

#ifndef LCQ_ANALYSIS_HPP
#define LCQ_ANALYSIS_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lcq/error.hpp"
#include "lcq/funceq.hpp"
#include "lcq/generator.hpp"

namespace lcq {

// h = log o f o exp o exp for a positive generator f on (1,+inf).
class TransformedGenerator {
 public:
  explicit TransformedGenerator(Generator source) : source_(std::move(source)) {
    if (source_.domain() != Domain::AboveOne) {
      throw ParameterError("h-transform needs a generator on (1,+inf)");
    }
    if (source_.sign() != Sign::Positive) {
      throw ParameterError("h-transform needs a positive-valued generator");
    }
  }

  // log f(exp(exp(tau))). The inner exp(tau) is handed to the log-argument
  // entry points, so tau up to ~700 stays usable.
  double operator()(double tau) const {
    const double s = std::exp(tau);
    if (!(s > 0.0) || !std::isfinite(s)) {
      throw EvaluationError("h-transform: exp(" + std::to_string(tau) + ") not representable");
    }
    const double v = source_.at_log(s);
    if (v < 0.0 || (v == 0.0 && !source_.has_log_abs_entry()) || std::isnan(v)) {
      throw EvaluationError("h-transform: f is not positive at log x = " + std::to_string(s));
    }
    if (source_.has_log_abs_entry()) return source_.log_abs_at_log(s);
    return std::log(v);
  }

  const Generator& source() const noexcept { return source_; }

 private:
  Generator source_;
};

inline TransformedGenerator h_transform(Generator f) {
  return TransformedGenerator(std::move(f));
}

// h(tau + log k) - h(tau) - (log k - e^tau). Vanishes exactly where f
// satisfies the reflexivity equation at x = exp(exp(tau)).
inline double krull_residual(const TransformedGenerator& h, double tau, int k) {
  if (k < 2) throw ParameterError("k must be >= 2");
  const double log_k = std::log(static_cast<double>(k));
  return h(tau + log_k) - h(tau) - (log_k - std::exp(tau));
}

enum class Curvature { Concave, Convex, Linear, Neither };

inline const char* name(Curvature c) noexcept {
  switch (c) {
    case Curvature::Concave:
      return "concave";
    case Curvature::Convex:
      return "convex";
    case Curvature::Linear:
      return "linear";
    case Curvature::Neither:
      return "neither";
  }
  return "?";
}

struct ConcavityReport {
  Curvature verdict = Curvature::Neither;
  double tolerance = 0.0;
  double min_second_difference = 0.0;
  double max_second_difference = 0.0;
  // (tau, h(tau - delta) - 2 h(tau) + h(tau + delta)) per grid node
  std::vector<std::pair<double, double>> differences;
};

// Central second differences of h on `points` equally spaced nodes of
// [lo, hi]. The verdict asks for a uniform sign up to 1e-7 delta^2.
inline ConcavityReport concavity_probe(const TransformedGenerator& h, double lo, double hi,
                                       std::size_t points, double delta) {
  if (!(delta > 0.0)) throw ParameterError("concavity probe needs delta > 0");
  if (points < 1) throw ParameterError("concavity probe needs at least one node");
  if (!(hi >= lo)) throw ParameterError("concavity probe needs lo <= hi");
  ConcavityReport report;
  report.tolerance = 1e-7 * delta * delta;
  report.min_second_difference = std::numeric_limits<double>::infinity();
  report.max_second_difference = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < points; ++i) {
    const double tau =
        points == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
    const double d = h(tau - delta) - 2.0 * h(tau) + h(tau + delta);
    report.differences.emplace_back(tau, d);
    report.min_second_difference = std::min(report.min_second_difference, d);
    report.max_second_difference = std::max(report.max_second_difference, d);
  }
  const bool concave = report.max_second_difference <= report.tolerance;
  const bool convex = report.min_second_difference >= -report.tolerance;
  report.verdict = concave && convex ? Curvature::Linear
                   : concave         ? Curvature::Concave
                   : convex          ? Curvature::Convex
                                     : Curvature::Neither;
  return report;
}

// Samples of phi(x) = (f(x) - c(x - 1)) / (x - 1)^2 in a right vicinity of 1.
struct BoundednessProbe {
  double c = 0.0;
  double window_r = 0.0;
  std::vector<std::pair<double, double>> samples;  // (x, phi(x)), x -> 1+
};

struct PhiReport {
  BoundednessProbe probe;
  bool bounded = false;
  // phi at the sample closest to 1
  double tail_value = 0.0;
  double median_abs = 0.0;
  double tail_max_abs = 0.0;
};

// phi at x = 1 + r 10^(-decades i / (samples - 1)), i = 0..samples-1.
// Bounded when max |phi| over the last decade stays below 10 times the
// median |phi| over the whole probe.
inline PhiReport phi_probe(const Generator& f, double c, double window_r, std::size_t samples,
                           double decades = 6.0) {
  if (!(c > 0.0)) throw ParameterError("phi probe needs c > 0");
  if (!(window_r > 0.0)) throw ParameterError("phi probe needs r > 0");
  if (samples < 4) throw ParameterError("phi probe needs at least 4 samples");
  PhiReport report;
  report.probe.c = c;
  report.probe.window_r = window_r;
  std::vector<double> abs_values;
  for (std::size_t i = 0; i < samples; ++i) {
    const double offset =
        window_r * std::pow(10.0, -decades * static_cast<double>(i) / static_cast<double>(samples - 1));
    const double x = 1.0 + offset;
    const double d = x - 1.0;  // exact once x is rounded
    double fx;
    try {
      fx = f(x);
    } catch (const Error& e) {
      throw EvaluationError(std::string("phi probe: f not evaluable near 1: ") + e.what());
    }
    const double phi = (fx - c * d) / (d * d);
    if (!std::isfinite(phi)) {
      throw EvaluationError("phi probe: non-finite phi at x = " + std::to_string(x));
    }
    report.probe.samples.emplace_back(x, phi);
    abs_values.push_back(std::abs(phi));
  }
  report.tail_value = report.probe.samples.back().second;
  std::vector<double> sorted = abs_values;
  std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2, sorted.end());
  report.median_abs = sorted[sorted.size() / 2];
  const double last_decade = window_r * std::pow(10.0, -(decades - 1.0));
  for (const auto& [x, phi] : report.probe.samples) {
    if (x - 1.0 <= last_decade * (1.0 + 1e-12)) {
      report.tail_max_abs = std::max(report.tail_max_abs, std::abs(phi));
    }
  }
  report.bounded = report.tail_max_abs <= 10.0 * report.median_abs;
  return report;
}

// k x^(-1/k) ((x^(1/k) - 1) / (x - 1))^2, via the telescoped form
// k x^(-1/k) / (sum_{j<k} x^(j/k))^2 which has no 0/0 at x = 1.
inline double contraction_factor(double x, int k) {
  if (!(x > 1.0) || !std::isfinite(x)) throw DomainError("contraction factor needs x > 1", x);
  if (k < 2) throw ParameterError("k must be >= 2");
  const double root = std::exp(std::log(x) / k);
  double sum = 0.0;
  double power = 1.0;
  for (int j = 0; j < k; ++j) {
    sum += power;
    power *= root;
  }
  return static_cast<double>(k) / (root * sum * sum);
}

struct PsiReport {
  // max over samples of |psi(x) - kappa(x) psi(x^(1/k))| / max(psi(x), tiny)
  double max_identity_residual = 0.0;
  double max_psi = 0.0;
  // sup of kappa over the samples and at the inner end of the window
  double sup_kappa = 0.0;
  // largest radius found (by halving window_r) with kappa <= 1/2 on (1, 1+r)
  double contraction_radius = 0.0;
  // both generators satisfy the reflexivity equation to 1e-10 on the samples
  bool reflexive = false;
  // psi vanishes to rounding on the samples
  bool psi_vanishes = false;
};

// Checks psi = |phi_1 - phi_2| against psi(x) = kappa(x) psi(x^(1/k)) near 1.
inline PsiReport psi_contraction_check(const Generator& f1, const Generator& f2, double c, int k,
                                       double window_r, std::size_t samples = 61) {
  if (!(window_r > 0.0)) throw ParameterError("psi check needs r > 0");
  if (samples < 2) throw ParameterError("psi check needs at least 2 samples");
  if (k < 2) throw ParameterError("k must be >= 2");
  auto phi = [c](const Generator& f, double x) {
    const double d = x - 1.0;
    return (f(x) - c * d) / (d * d);
  };
  PsiReport report;
  report.reflexive = true;
  double max_phi = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const double offset =
        window_r * std::pow(10.0, -6.0 * static_cast<double>(i) / static_cast<double>(samples - 1));
    const double x = 1.0 + offset;
    const double alpha = std::exp(std::log(x) / k);
    if (!(alpha > 1.0)) continue;
    for (const Generator* f : {&f1, &f2}) {
      const double fx = (*f)(x);
      const double r = reflexivity_residual(*f, x, k);
      if (!(std::abs(r) <= 1e-10 * std::max(std::abs(fx), std::numeric_limits<double>::min()))) {
        report.reflexive = false;
      }
    }
    const double p1 = phi(f1, x), p2 = phi(f2, x);
    const double psi_x = std::abs(p1 - p2);
    const double psi_alpha = std::abs(phi(f1, alpha) - phi(f2, alpha));
    const double kappa = contraction_factor(x, k);
    const double rhs = kappa * psi_alpha;
    const double scale = std::max({psi_x, rhs, std::numeric_limits<double>::min()});
    report.max_identity_residual =
        std::max(report.max_identity_residual, std::abs(psi_x - rhs) / scale);
    report.max_psi = std::max(report.max_psi, psi_x);
    max_phi = std::max({max_phi, std::abs(p1), std::abs(p2)});
    report.sup_kappa = std::max(report.sup_kappa, kappa);
  }
  report.sup_kappa = std::max(report.sup_kappa, contraction_factor(1.0 + 1e-9, k));
  double r = window_r;
  for (int halvings = 0; halvings < 60 && r > 0.0; ++halvings, r /= 2.0) {
    bool ok = true;
    for (int j = 0; j <= 64 && ok; ++j) {
      ok = contraction_factor(1.0 + r * std::pow(2.0, -0.25 * j), k) <= 0.5;
    }
    if (ok) {
      report.contraction_radius = r;
      break;
    }
  }
  report.psi_vanishes = report.max_psi <= 1e-6 * std::max(1.0, max_phi);
  return report;
}

// h(mean of points) - mean of h(points).
inline double jensen_residual(const std::function<double(double)>& h,
                              std::span<const double> points) {
  if (points.size() < 2) throw ArityError("Jensen residual needs at least 2 points");
  double mean = 0.0;
  double image = 0.0;
  for (double s : points) {
    mean += s;
    image += h(s);
  }
  const double k = static_cast<double>(points.size());
  return h(mean / k) - image / k;
}

}  // namespace lcq

#endif  // LCQ_ANALYSIS_HPP
