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

#ifndef LCQ_RNG_HPP
#define LCQ_RNG_HPP

#include <cstdint>

namespace lcq {

// Counter-based pseudo-random streams built on the SplitMix64 finalizer.
//
// Stream `index` under `seed` starts at state mix64(mix64(seed) + index * G)
// with G = 0x9e3779b97f4a7c15 and advances by G per draw; the j-th output is
// mix64(state_0 + (j + 1) * G). Every sample of a batch gets its own stream,
// so a batch can be split across threads in any way and still reproduce the
// serial results bit for bit.
inline constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class SampleStream {
 public:
  constexpr SampleStream(std::uint64_t seed, std::uint64_t index) noexcept
      : state_(mix64(mix64(seed) + index * kGoldenGamma)) {}

  constexpr std::uint64_t next() noexcept {
    state_ += kGoldenGamma;
    return mix64(state_);
  }

  // Uniform on [0, 1) with 53 random bits.
  constexpr double uniform() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // Uniform on [lo, hi).
  constexpr double uniform(double lo, double hi) noexcept {
    return lo + (hi - lo) * uniform();
  }

  // Uniform integer on [0, n). Multiply-shift; bias is below 2^-64 * n.
  constexpr std::uint64_t below(std::uint64_t n) noexcept {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }

 private:
  std::uint64_t state_;
};

}  // namespace lcq

#endif  // LCQ_RNG_HPP
