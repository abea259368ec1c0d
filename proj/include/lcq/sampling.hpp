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

#ifndef LCQ_SAMPLING_HPP
#define LCQ_SAMPLING_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "lcq/domain.hpp"
#include "lcq/rng.hpp"

namespace lcq {

// Shapes of sample tuples. Mixing them raises the discrimination power of
// sampling-based checks: near-1 tuples probe the singular end of the
// generators, near-diagonal tuples probe reflexivity, spread tuples the bulk.
enum class TupleShape { Spread, NearOne, NearDiagonal };

constexpr TupleShape shape_for(std::uint64_t index) noexcept {
  switch (index % 3) {
    case 1:
      return TupleShape::NearOne;
    case 2:
      return TupleShape::NearDiagonal;
    default:
      return TupleShape::Spread;
  }
}

// Range of |log x| for sampled coordinates. The defaults give coordinates in
// (1 + 1e-6, 1e3) above one and their reciprocals below one.
struct SampleRange {
  double min_log = 1e-6;
  double max_log = 6.907755278982137;  // log(1e3)
};

// |log x| log-uniform on [lo, hi).
inline double sample_log_magnitude(SampleStream& rng, double lo, double hi) {
  return std::exp(rng.uniform(std::log(lo), std::log(hi)));
}

namespace detail {

inline std::vector<double> sample_magnitudes(std::size_t k, SampleStream& rng,
                                             TupleShape shape,
                                             const SampleRange& range) {
  std::vector<double> mags(k);
  switch (shape) {
    case TupleShape::Spread:
      for (auto& m : mags) m = sample_log_magnitude(rng, range.min_log, range.max_log);
      break;
    case TupleShape::NearOne:
      for (auto& m : mags) {
        m = sample_log_magnitude(rng, range.min_log,
                                 std::min(0.1, range.max_log));
      }
      break;
    case TupleShape::NearDiagonal: {
      const double base =
          sample_log_magnitude(rng, range.min_log, range.max_log);
      for (auto& m : mags) {
        m = std::clamp(base * std::exp(rng.uniform(-1e-3, 1e-3)),
                       range.min_log, range.max_log);
      }
      break;
    }
  }
  return mags;
}

}  // namespace detail

// Draws a k-tuple inside `domain`. On Positive, a third of the tuples lie
// above one, a third below one and a third straddle 1.
inline std::vector<double> sample_tuple(Domain domain, std::size_t k,
                                        SampleStream& rng, TupleShape shape,
                                        const SampleRange& range = {}) {
  auto mags = detail::sample_magnitudes(k, rng, shape, range);
  std::vector<double> out(k);
  int side = domain == Domain::AboveOne ? 1 : -1;
  if (domain == Domain::Positive) {
    const auto branch = rng.below(3);
    side = branch == 0 ? 1 : branch == 1 ? -1 : 0;
  }
  for (std::size_t i = 0; i < k; ++i) {
    int s = side;
    if (s == 0) s = rng.below(2) ? 1 : -1;
    out[i] = std::exp(s * mags[i]);
  }
  return out;
}

}  // namespace lcq

#endif  // LCQ_SAMPLING_HPP
