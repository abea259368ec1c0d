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

#ifndef LCQ_PROPERTIES_HPP
#define LCQ_PROPERTIES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <thread>
#include <utility>
#include <vector>

#include "lcq/domain.hpp"
#include "lcq/means.hpp"
#include "lcq/rng.hpp"
#include "lcq/sampling.hpp"

namespace lcq {

struct ProbeOptions {
  SampleRange range{};
  // Nonconstant tuples used for the strictness check must spread at least
  // this much, otherwise rounding can pin the value to an endpoint.
  double strictness_gap = 0.1;
  // Relative bump used by the monotonicity probe.
  double monotone_step = 1e-3;
  unsigned threads = 1;
};

// A signed residual together with the tuple and parameter that produced it.
struct ResidualWitness {
  double residual = 0.0;
  double parameter = 0.0;
  std::vector<double> point;
};

struct MeanPropertyReport {
  std::size_t samples = 0;
  std::size_t failed_evaluations = 0;

  std::size_t bounds_violations = 0;
  double max_bounds_violation = 0.0;

  double max_reflexivity_residual = 0.0;

  std::size_t strictness_checked = 0;
  std::optional<std::vector<double>> strictness_witness;
  std::optional<std::vector<double>> strictness_counterexample;

  // Relative change under a random permutation of the coordinates.
  double max_symmetry_residual = 0.0;

  // M(t x) - t M(x) and M(x + t) - (M(x) + t), largest in magnitude.
  std::size_t homogeneity_checked = 0;
  ResidualWitness homogeneity;
  std::size_t translativity_checked = 0;
  ResidualWitness translativity;

  // Numeric probe only; monotonicity is not asserted anywhere.
  std::size_t monotonicity_checked = 0;
  std::size_t monotonicity_violations = 0;

  bool is_mean() const noexcept { return bounds_violations == 0; }
  bool is_strict() const noexcept { return !strictness_counterexample; }
};

// M(t x) - t M(x).
inline double homogeneity_residual(const MeanFunction& mean,
                                   std::span<const double> x, double t) {
  std::vector<double> scaled(x.begin(), x.end());
  for (auto& v : scaled) v *= t;
  return mean(scaled) - t * mean(x);
}

// M(x + t) - (M(x) + t).
inline double translativity_residual(const MeanFunction& mean,
                                     std::span<const double> x, double t) {
  std::vector<double> shifted(x.begin(), x.end());
  for (auto& v : shifted) v += t;
  return mean(shifted) - (mean(x) + t);
}

namespace detail {

struct PropertySample {
  bool failed = false;
  double bounds_violation = 0.0;
  double reflexivity = 0.0;
  int strict = -1;  // -1 not checked, 0 counterexample, 1 witness
  double symmetry = 0.0;
  std::vector<double> point;
  std::optional<std::pair<double, double>> homogeneity;    // (residual, t)
  std::optional<std::pair<double, double>> translativity;  // (residual, t)
  int monotone = -1;  // -1 not checked, 0 violated, 1 ok
};

inline double homogeneity_factor(Domain d, SampleStream& rng) {
  switch (d) {
    case Domain::AboveOne:
      return rng.uniform(1.1, 3.0);
    case Domain::UnitInterval:
      return rng.uniform(0.3, 0.9);
    case Domain::Positive:
      return rng.uniform(0.5, 2.0);
  }
  return 1.0;
}

inline double translation(Domain d, SampleStream& rng, double min_coord) {
  if (d == Domain::UnitInterval) return -rng.uniform(0.05, 0.5) * min_coord;
  return rng.uniform(0.1, 3.0);
}

inline bool all_inside(Domain d, const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [d](double x) { return contains(d, x); });
}

inline PropertySample probe_one(const MeanFunction& mean, Domain domain,
                                std::size_t k, std::uint64_t seed,
                                std::uint64_t index, const ProbeOptions& opt) {
  PropertySample s;
  SampleStream rng(seed, index);
  s.point = sample_tuple(domain, k, rng, shape_for(index), opt.range);
  const auto& x = s.point;
  // Draw every random quantity up front so the stream layout does not depend
  // on which evaluations succeed.
  std::vector<double> perm = x;
  for (std::size_t i = perm.size(); i > 1; --i) {
    std::swap(perm[i - 1], perm[rng.below(i)]);
  }
  const double t_scale = homogeneity_factor(domain, rng);
  const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  const double t_shift = translation(domain, rng, *lo);
  const std::size_t bump = rng.below(k);

  try {
    const double value = mean(x);
    if (!std::isfinite(value)) throw EvaluationError("non-finite mean value");
    s.bounds_violation = std::max({0.0, *lo - value, value - *hi});

    if (*hi - *lo >= opt.strictness_gap) {
      s.strict = (*lo < value && value < *hi) ? 1 : 0;
    }

    s.symmetry = std::abs(mean(perm) - value) / std::abs(value);

    const std::vector<double> diagonal(k, x[0]);
    s.reflexivity = std::abs(mean(diagonal) - x[0]);

    std::vector<double> moved(x);
    for (auto& v : moved) v *= t_scale;
    if (all_inside(domain, moved)) {
      s.homogeneity = {homogeneity_residual(mean, x, t_scale), t_scale};
    }
    moved = x;
    for (auto& v : moved) v += t_shift;
    if (all_inside(domain, moved)) {
      s.translativity = {translativity_residual(mean, x, t_shift), t_shift};
    }

    std::vector<double> raised(x);
    raised[bump] = domain == Domain::UnitInterval
                       ? raised[bump] + opt.monotone_step * (1.0 - raised[bump])
                       : raised[bump] * (1.0 + opt.monotone_step);
    if (all_inside(domain, raised) && raised[bump] > x[bump]) {
      s.monotone = mean(raised) >= value - 1e-12 * std::abs(value) ? 1 : 0;
    }
  } catch (const Error&) {
    s.failed = true;
  }
  return s;
}

inline void fold(MeanPropertyReport& r, PropertySample&& s) {
  ++r.samples;
  if (s.failed) {
    ++r.failed_evaluations;
    return;
  }
  if (s.bounds_violation > 0.0) ++r.bounds_violations;
  r.max_bounds_violation = std::max(r.max_bounds_violation, s.bounds_violation);
  r.max_reflexivity_residual = std::max(r.max_reflexivity_residual, s.reflexivity);
  if (s.strict >= 0) {
    ++r.strictness_checked;
    if (s.strict == 1 && !r.strictness_witness) r.strictness_witness = s.point;
    if (s.strict == 0 && !r.strictness_counterexample) {
      r.strictness_counterexample = s.point;
    }
  }
  r.max_symmetry_residual = std::max(r.max_symmetry_residual, s.symmetry);
  if (s.homogeneity) {
    ++r.homogeneity_checked;
    if (std::abs(s.homogeneity->first) > std::abs(r.homogeneity.residual)) {
      r.homogeneity = {s.homogeneity->first, s.homogeneity->second, s.point};
    }
  }
  if (s.translativity) {
    ++r.translativity_checked;
    if (std::abs(s.translativity->first) > std::abs(r.translativity.residual)) {
      r.translativity = {s.translativity->first, s.translativity->second, s.point};
    }
  }
  if (s.monotone >= 0) {
    ++r.monotonicity_checked;
    if (s.monotone == 0) ++r.monotonicity_violations;
  }
}

}  // namespace detail

// Probes the defining properties of a mean on `sample_count` seeded tuples.
// Sample i depends only on (seed, i), and the results are folded in index
// order, so the report does not depend on `options.threads`.
inline MeanPropertyReport probe_mean_properties(const MeanFunction& mean,
                                                Domain domain, std::size_t k,
                                                std::size_t sample_count,
                                                std::uint64_t seed,
                                                const ProbeOptions& options = {}) {
  if (k < 2) throw ArityError("probe needs k >= 2");
  if (sample_count < 1) throw ParameterError("sample_count must be >= 1");

  MeanPropertyReport report;
  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1) {
    for (std::uint64_t i = 0; i < sample_count; ++i) {
      detail::fold(report, detail::probe_one(mean, domain, k, seed, i, options));
    }
    return report;
  }

  std::vector<detail::PropertySample> samples(sample_count);
  {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (sample_count + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t begin = t * chunk;
      const std::size_t end = std::min(sample_count, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back([&, begin, end] {
        for (std::size_t i = begin; i < end; ++i) {
          samples[i] = detail::probe_one(mean, domain, k, seed, i, options);
        }
      });
    }
  }
  for (auto& s : samples) detail::fold(report, std::move(s));
  return report;
}

}  // namespace lcq

#endif  // LCQ_PROPERTIES_HPP
