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

#ifndef LCQ_DYNAMICS_HPP
#define LCQ_DYNAMICS_HPP

#include <cmath>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "lcq/error.hpp"
#include "lcq/format.hpp"
#include "lcq/means.hpp"

namespace lcq {

struct IterationStep {
  std::size_t iter = 0;
  double x = 0.0;
  double y = 0.0;
  double gap = 0.0;
  // K(x_n, y_n) - K(x_0, y_0) for the reference mean K
  double invariance_residual = 0.0;
};

struct IterationTrace {
  std::vector<IterationStep> steps;
  std::optional<double> limit;
  std::size_t iterations_used = 0;
  // set when an evaluation failed mid-orbit; the trace stops there
  std::optional<std::string> error;
  // gap never increased after the first step
  bool gap_monotone = true;

  double max_abs_invariance_residual() const {
    double m = 0.0;
    for (const auto& s : steps) m = std::max(m, std::abs(s.invariance_residual));
    return m;
  }
};

struct IterationOptions {
  double tol = 1e-12;
  std::size_t max_iter = 200;
  // stop on |x - y| / max(x, y) instead of |x - y|
  bool relative_gap = false;
};

// Orbit of (x, y) under (x, y) -> (M1(x, y), M2(x, y)) until the gap drops
// below tol or max_iter steps have been taken.
inline IterationTrace iterate_pair(const BinaryMean& m1, const BinaryMean& m2, double x,
                                   double y, const BinaryMean& reference,
                                   const IterationOptions& options = {}) {
  if (!(options.tol > 0.0)) throw ParameterError("iteration tolerance must be > 0");
  for (double v : {x, y}) {
    if (!std::isfinite(v) || !(v > 0.0)) throw DomainError("start point must be positive and finite", v);
  }
  auto gap_of = [&](double a, double b) {
    const double g = std::abs(a - b);
    return options.relative_gap ? g / std::max(std::abs(a), std::abs(b)) : g;
  };

  IterationTrace trace;
  const double k0 = reference(x, y);
  trace.steps.push_back({0, x, y, gap_of(x, y), 0.0});
  while (true) {
    const IterationStep& cur = trace.steps.back();
    if (cur.gap < options.tol) {
      trace.limit = cur.x + (cur.y - cur.x) / 2.0;
      break;
    }
    if (cur.iter >= options.max_iter) break;
    IterationStep next;
    next.iter = cur.iter + 1;
    try {
      next.x = m1(cur.x, cur.y);
      next.y = m2(cur.x, cur.y);
      if (!std::isfinite(next.x) || !std::isfinite(next.y)) {
        throw EvaluationError("non-finite iterate");
      }
      next.invariance_residual = reference(next.x, next.y) - k0;
    } catch (const Error& e) {
      trace.error = "step " + std::to_string(next.iter) + ": " + e.what();
      break;
    }
    next.gap = gap_of(next.x, next.y);
    if (cur.iter >= 1 && next.gap > cur.gap) trace.gap_monotone = false;
    trace.steps.push_back(next);
  }
  trace.iterations_used = trace.steps.back().iter;
  return trace;
}

// K(M1(x, y), M2(x, y)) - K(x, y).
inline double invariance_residual(const BinaryMean& reference, const BinaryMean& m1,
                                  const BinaryMean& m2, double x, double y) {
  return reference(m1(x, y), m2(x, y)) - reference(x, y);
}

struct InvariantMeanEstimate {
  std::optional<double> value;
  // |value - K(x0, y0)| when a reference K was supplied
  std::optional<double> reference_gap;
  IterationTrace trace;
};

// Common limit of the iterates, i.e. the value of the invariant mean at
// the start point.
inline InvariantMeanEstimate estimate_invariant_mean(const BinaryMean& m1, const BinaryMean& m2,
                                                     double x, double y, double tol,
                                                     std::size_t max_iter = 200,
                                                     const BinaryMean& reference = {}) {
  InvariantMeanEstimate est;
  const BinaryMean k = reference ? reference : BinaryMean([](double a, double b) {
    return geometric_mean(a, b);
  });
  est.trace = iterate_pair(m1, m2, x, y, k, {tol, max_iter, false});
  est.value = est.trace.limit;
  if (est.value && reference) est.reference_gap = std::abs(*est.value - reference(x, y));
  return est;
}

inline constexpr std::string_view kTraceHeader = "iter,x,y,gap,invariance_residual";

inline void write_trace_csv(std::ostream& out, const IterationTrace& trace) {
  out << kTraceHeader << '\n';
  for (const auto& s : trace.steps) {
    out << s.iter << ',' << format_double(s.x) << ',' << format_double(s.y) << ','
        << format_double(s.gap) << ',' << format_double(s.invariance_residual) << '\n';
  }
}

// Two-variable means available to the iteration engine, by name:
// G, L2, L2inv, comp-L2, A, H.
inline BinaryMean catalog_mean(std::string_view key) {
  if (key == "G") return [](double a, double b) { return geometric_mean(a, b); };
  if (key == "L2") return [](double a, double b) { return log_cauchy_mean2(a, b); };
  if (key == "L2inv") return [](double a, double b) { return log_cauchy_conjugate2(a, b); };
  if (key == "comp-L2") return complementary_mean([](double a, double b) { return log_cauchy_mean2(a, b); });
  if (key == "A") return [](double a, double b) { return a + (b - a) / 2.0; };
  if (key == "H") return [](double a, double b) { return 2.0 * a * b / (a + b); };
  throw ParameterError("unknown mean '" + std::string(key) +
                       "' (expected G, L2, L2inv, comp-L2, A or H)");
}

}  // namespace lcq

#endif  // LCQ_DYNAMICS_HPP
