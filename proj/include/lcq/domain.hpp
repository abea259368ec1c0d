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

#ifndef LCQ_DOMAIN_HPP
#define LCQ_DOMAIN_HPP

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lcq/error.hpp"

namespace lcq {

// The three open intervals of (0, +inf) that are closed under
// multiplication and used throughout the library.
enum class Domain {
  AboveOne,      // (1, +inf)
  UnitInterval,  // (0, 1)
  Positive,      // (0, +inf)
};

constexpr bool contains(Domain d, double x) noexcept {
  switch (d) {
    case Domain::AboveOne:
      return x > 1.0 && x < HUGE_VAL;
    case Domain::UnitInterval:
      return x > 0.0 && x < 1.0;
    case Domain::Positive:
      return x > 0.0 && x < HUGE_VAL;
  }
  return false;
}

constexpr std::string_view name(Domain d) noexcept {
  switch (d) {
    case Domain::AboveOne:
      return "above-one";
    case Domain::UnitInterval:
      return "unit";
    case Domain::Positive:
      return "positive";
  }
  return "?";
}

inline Domain parse_domain(std::string_view text) {
  if (text == "above-one") return Domain::AboveOne;
  if (text == "unit") return Domain::UnitInterval;
  if (text == "positive") return Domain::Positive;
  throw ParameterError("unknown domain '" + std::string(text) +
                       "' (expected above-one, unit or positive)");
}

// Image of the domain under x -> 1/x.
constexpr Domain reciprocal(Domain d) noexcept {
  switch (d) {
    case Domain::AboveOne:
      return Domain::UnitInterval;
    case Domain::UnitInterval:
      return Domain::AboveOne;
    case Domain::Positive:
      return Domain::Positive;
  }
  return d;
}

// A k-tuple (k >= 2) of finite reals lying strictly inside a domain.
class MeanPoint {
 public:
  MeanPoint(std::vector<double> values, Domain domain)
      : values_(std::move(values)), domain_(domain) {
    if (values_.size() < 2) {
      throw ArityError("a mean point needs at least 2 coordinates, got " +
                       std::to_string(values_.size()));
    }
    for (double v : values_) {
      if (!std::isfinite(v)) {
        throw DomainError("coordinate is not finite", v);
      }
      if (!contains(domain_, v)) {
        throw DomainError("coordinate outside domain " +
                              std::string(name(domain_)),
                          v);
      }
    }
  }

  std::span<const double> values() const noexcept { return values_; }
  Domain domain() const noexcept { return domain_; }
  std::size_t arity() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }

  double min() const { return *std::min_element(values_.begin(), values_.end()); }
  double max() const { return *std::max_element(values_.begin(), values_.end()); }

 private:
  std::vector<double> values_;
  Domain domain_;
};

// Outcome of evaluating a candidate mean at one point.
struct MeanReport {
  double min = 0.0;
  double max = 0.0;
  double value = 0.0;
  // Tuple is nonconstant and min < value < max.
  bool strict = false;

  bool within_bounds() const noexcept { return min <= value && value <= max; }
};

}  // namespace lcq

#endif  // LCQ_DOMAIN_HPP
