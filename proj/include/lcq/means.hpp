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

#ifndef LCQ_MEANS_HPP
#define LCQ_MEANS_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "lcq/domain.hpp"
#include "lcq/error.hpp"

namespace lcq {

// A k-variable mean evaluator. The arity is whatever the span holds.
using MeanFunction = std::function<double(std::span<const double>)>;
// A two-variable mean evaluator.
using BinaryMean = std::function<double(double, double)>;

// Coordinates closer than this to 1 are rejected by the one-sided means.
inline constexpr double kSeamExclusion = 1e-12;

namespace detail {

inline void require_positive_finite(std::span<const double> values) {
  for (double v : values) {
    if (!std::isfinite(v)) throw DomainError("value is not finite", v);
    if (!(v > 0.0)) throw DomainError("value is not positive", v);
  }
}

inline void require_arity(std::span<const double> values) {
  if (values.size() < 2) {
    throw ArityError("mean needs at least 2 arguments, got " +
                     std::to_string(values.size()));
  }
}

inline double clamp_to_hull(double value, std::span<const double> values) {
  auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return std::clamp(value, *lo, *hi);
}

// exp(mant_log_sum / n) * 2^(exp_sum / n). Binary exponents are summed
// exactly as integers, so only the mantissa logarithms (each in
// [-log 2, 0)) pass through exp and the rounding error does not grow with
// the magnitude of the arguments.
inline double split_geometric(double mant_log_sum, long long exp_sum, long long n) {
  long long q = exp_sum / n;
  long long r = exp_sum % n;
  if (r < 0) {
    r += n;
    --q;
  }
  const double nd = static_cast<double>(n);
  const double scale = std::exp(mant_log_sum / nd) * std::exp2(static_cast<double>(r) / nd);
  return std::ldexp(scale, static_cast<int>(q));
}

struct Split {
  double mant_log;
  int exp;
};

inline Split split(double v) {
  int e = 0;
  const double m = std::frexp(v, &e);
  return {std::log(m), e};
}

// Sum over i of (l_i / S) G_i with l = log x, S = sum of l and G_i the
// geometric mean of the other k - 1 coordinates. Requires all logs of one
// strict sign. Leave-one-out sums come from prefix and suffix sums so that
// no term is ever subtracted from a total.
inline double log_weighted_mean(std::span<const double> values) {
  const std::size_t k = values.size();
  std::vector<double> logs(k);
  std::vector<Split> parts(k);
  for (std::size_t i = 0; i < k; ++i) {
    logs[i] = std::log(values[i]);
    parts[i] = split(values[i]);
  }

  std::vector<double> prefix(k + 1, 0.0), suffix(k + 1, 0.0);
  std::vector<double> mprefix(k + 1, 0.0), msuffix(k + 1, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    prefix[i + 1] = prefix[i] + logs[i];
    mprefix[i + 1] = mprefix[i] + parts[i].mant_log;
  }
  for (std::size_t i = k; i-- > 0;) {
    suffix[i] = suffix[i + 1] + logs[i];
    msuffix[i] = msuffix[i + 1] + parts[i].mant_log;
  }
  long long exp_total = 0;
  for (const auto& p : parts) exp_total += p.exp;

  const double total = prefix[k];
  const long long root = static_cast<long long>(k) - 1;
  double acc = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const double others = split_geometric(mprefix[i] + msuffix[i + 1],
                                          exp_total - parts[i].exp, root);
    acc += (logs[i] / total) * others;
  }
  return clamp_to_hull(acc, values);
}

}  // namespace detail

// Geometric mean. Mantissas and binary exponents are averaged separately,
// which keeps the result accurate to a few ulps across the whole double
// range.
inline double geometric_mean(std::span<const double> values) {
  if (values.empty()) throw ArityError("geometric mean of an empty list");
  detail::require_positive_finite(values);
  double mant = 0.0;
  long long exps = 0;
  for (double v : values) {
    const auto p = detail::split(v);
    mant += p.mant_log;
    exps += p.exp;
  }
  return detail::split_geometric(mant, exps, static_cast<long long>(values.size()));
}

// Two-variable form: sqrt(xy) directly while the product is a normal
// double, otherwise through logarithms.
inline double geometric_mean(double x, double y) {
  const double v[2] = {x, y};
  detail::require_positive_finite(v);
  const double product = x * y;
  if (std::isnormal(product)) return std::sqrt(product);
  return geometric_mean(std::span<const double>(v));
}

// The logarithmic Cauchy quotient mean: the log-weighted combination of the
// leave-one-out geometric means. Defined when every coordinate lies on the
// same side of 1 (and none within kSeamExclusion of it).
inline double log_cauchy_mean(std::span<const double> values) {
  detail::require_arity(values);
  detail::require_positive_finite(values);
  const bool above = values[0] > 1.0;
  for (double v : values) {
    if (std::abs(v - 1.0) <= kSeamExclusion) {
      throw DomainError("coordinate too close to 1", v);
    }
    if ((v > 1.0) != above) {
      throw DomainError("coordinates straddle 1", v);
    }
  }
  return detail::log_weighted_mean(values);
}

inline double log_cauchy_mean(const MeanPoint& point) {
  return log_cauchy_mean(point.values());
}

// Increasing extension of log_cauchy_mean to (0, +inf)^k: identical on
// (0,1)^k and (1,+inf)^k, and 1 on every tuple that touches or straddles 1.
inline double extended_mean(std::span<const double> values) {
  detail::require_arity(values);
  detail::require_positive_finite(values);
  const bool all_above =
      std::all_of(values.begin(), values.end(), [](double v) { return v > 1.0; });
  const bool all_below =
      std::all_of(values.begin(), values.end(), [](double v) { return v < 1.0; });
  if (!all_above && !all_below) return 1.0;
  return detail::log_weighted_mean(values);
}

// Closed form of the two-variable involutory conjugate of log_cauchy_mean,
// xy (log x + log y) / (x log x + y log y). Also a mean on (1,+inf)^2.
inline double log_cauchy_conjugate2(double x, double y) {
  const double v[2] = {x, y};
  detail::require_positive_finite(v);
  const double lx = std::log(x);
  const double ly = std::log(y);
  const double den = x * lx + y * ly;
  if (den == 0.0 || (lx > 0.0) != (ly > 0.0)) {
    throw DomainError("coordinates straddle 1", lx > 0.0 ? y : x);
  }
  return detail::clamp_to_hull(x * y * ((lx + ly) / den), v);
}

inline double log_cauchy_mean2(double x, double y) {
  const double v[2] = {x, y};
  return log_cauchy_mean(v);
}

inline double arithmetic_mean(std::span<const double> values) {
  if (values.empty()) throw ArityError("arithmetic mean of an empty list");
  return std::accumulate(values.begin(), values.end(), 0.0) /
         static_cast<double>(values.size());
}

inline double harmonic_mean(std::span<const double> values) {
  if (values.empty()) throw ArityError("harmonic mean of an empty list");
  detail::require_positive_finite(values);
  double acc = 0.0;
  for (double v : values) acc += 1.0 / v;
  return static_cast<double>(values.size()) / acc;
}

// x -> 1 / M(1/x_1, ..., 1/x_k). `mean_domain` is the domain of M; the
// conjugate lives on its reciprocal image.
inline MeanFunction involutory_conjugate(MeanFunction mean, Domain mean_domain) {
  return [mean = std::move(mean), mean_domain](std::span<const double> values) {
    std::vector<double> recip(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (!(values[i] > 0.0) || !std::isfinite(values[i])) {
        throw DomainError("value is not positive and finite", values[i]);
      }
      recip[i] = 1.0 / values[i];
      if (!contains(mean_domain, recip[i])) {
        throw DomainError("reciprocal leaves the domain of the mean",
                          values[i]);
      }
    }
    return 1.0 / mean(recip);
  };
}

// N(x, y) = xy / M(x, y), so that G(N, M) = G.
inline BinaryMean complementary_mean(BinaryMean mean) {
  return [mean = std::move(mean)](double x, double y) {
    const double m = mean(x, y);
    if (!(m > 0.0) || !std::isfinite(m)) {
      throw EvaluationError("complementary mean needs M(x, y) > 0, got " +
                            std::to_string(m));
    }
    return (x / m) * y;  // x y / m without overflowing x y
  };
}

inline BinaryMean as_binary(MeanFunction mean) {
  return [mean = std::move(mean)](double x, double y) {
    const double v[2] = {x, y};
    return mean(v);
  };
}

inline MeanReport evaluate(const MeanFunction& mean,
                           std::span<const double> values) {
  MeanReport report;
  auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  report.min = *lo;
  report.max = *hi;
  report.value = mean(values);
  report.strict =
      report.min < report.max && report.min < report.value && report.value < report.max;
  return report;
}

}  // namespace lcq

#endif  // LCQ_MEANS_HPP
