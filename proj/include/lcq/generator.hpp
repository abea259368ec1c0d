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

#ifndef LCQ_GENERATOR_HPP
#define LCQ_GENERATOR_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>

#include "lcq/domain.hpp"
#include "lcq/error.hpp"
#include "lcq/rng.hpp"
#include "lcq/sampling.hpp"

namespace lcq {

enum class Sign { Positive, Negative };

// A real function on a multiplicatively closed domain, used as the
// generator f of a logarithmic Cauchy quotient.
//
// Besides plain evaluation a generator may provide two optional entry
// points taking s = log x: `at_log` returns f(e^s) and `log_abs_at_log`
// returns log|f(e^s)|. They let callers evaluate f at products of many
// coordinates (and the double exponential of the h-transform) without
// forming e^s. When absent, `at_log` falls back to exp-then-evaluate and
// `log_abs_at_log` to log|at_log(s)|.
class Generator {
 public:
  using Function = std::function<double(double)>;

  Generator(std::string label, Domain domain, Sign sign, Function eval,
            Function at_log = {}, Function log_abs_at_log = {})
      : label_(std::move(label)),
        domain_(domain),
        sign_(sign),
        eval_(std::move(eval)),
        at_log_(std::move(at_log)),
        log_abs_at_log_(std::move(log_abs_at_log)) {
    if (!eval_) throw ParameterError("generator '" + label_ + "' has no evaluator");
  }

  double operator()(double x) const {
    if (!contains(domain_, x)) {
      throw DomainError("generator '" + label_ + "' evaluated outside " +
                            std::string(name(domain_)),
                        x);
    }
    return eval_(x);
  }

  double at_log(double s) const {
    if (at_log_) {
      check_log_argument(s);
      return at_log_(s);
    }
    const double x = std::exp(s);
    if (!std::isfinite(x) || x == 0.0) {
      throw RangeError("exp(" + std::to_string(s) + ") is not representable and '" +
                       label_ + "' has no log-argument entry point");
    }
    if (!contains(domain_, x)) {
      // exp rounded onto the seam
      throw RangeError("exp(" + std::to_string(s) + ") rounds onto the boundary of " +
                       std::string(name(domain_)));
    }
    return eval_(x);
  }

  double log_abs_at_log(double s) const {
    if (log_abs_at_log_) {
      check_log_argument(s);
      return log_abs_at_log_(s);
    }
    const double v = at_log(s);
    if (v == 0.0 || !std::isfinite(v)) {
      throw EvaluationError("log|f| undefined: '" + label_ + "' returned " +
                            std::to_string(v));
    }
    return std::log(std::abs(v));
  }

  bool has_log_entry() const noexcept { return static_cast<bool>(at_log_); }
  bool has_log_abs_entry() const noexcept { return static_cast<bool>(log_abs_at_log_); }
  const std::string& label() const noexcept { return label_; }
  Domain domain() const noexcept { return domain_; }
  Sign sign() const noexcept { return sign_; }

 private:
  void check_log_argument(double s) const {
    const bool ok = domain_ == Domain::AboveOne       ? s > 0.0
                    : domain_ == Domain::UnitInterval ? s < 0.0
                                                      : !std::isnan(s);
    if (!ok) {
      throw DomainError("generator '" + label_ + "' evaluated at log-argument outside " +
                            std::string(name(domain_)),
                        s);
    }
  }

  std::string label_;
  Domain domain_;
  Sign sign_;
  Function eval_;
  Function at_log_;
  Function log_abs_at_log_;
};

namespace detail {

inline std::string fmt_param(double v) {
  std::string s = std::to_string(v);
  s.erase(s.find_last_not_of('0') + 1);
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

}  // namespace detail

// x -> c * log(x) * x^(-alpha), evaluated as c * s * exp(-alpha * s).
// Positive-valued when c > 0 on (1,+inf) or c < 0 on (0,1).
inline Generator power_log_generator(double c, double alpha,
                                     Domain domain = Domain::AboveOne) {
  if (c == 0.0 || !std::isfinite(c)) throw ParameterError("power-log needs finite c != 0");
  if (!std::isfinite(alpha)) throw ParameterError("power-log needs finite alpha");
  if (domain == Domain::Positive) {
    throw ParameterError("power-log generator changes sign on (0,+inf)");
  }
  const Sign sign = (c > 0.0) == (domain == Domain::AboveOne) ? Sign::Positive
                                                              : Sign::Negative;
  auto at_log = [c, alpha](double s) { return c * s * std::exp(-alpha * s); };
  auto log_abs = [c, alpha](double s) {
    return std::log(std::abs(c)) + std::log(std::abs(s)) - alpha * s;
  };
  auto eval = [at_log](double x) { return at_log(std::log(x)); };
  return Generator("powerlog(c=" + detail::fmt_param(c) +
                       ",alpha=" + detail::fmt_param(alpha) + ")",
                   domain, sign, eval, at_log, log_abs);
}

// The mean-inducing generator x -> c * log(x) / x^(1/(k-1)). The sign of c
// must make it positive-valued: c > 0 on (1,+inf), c < 0 on (0,1).
inline Generator canonical_generator(double c, int k,
                                     Domain domain = Domain::AboveOne) {
  if (c == 0.0 || !std::isfinite(c)) throw ParameterError("canonical generator needs finite c != 0");
  if (k < 2) throw ParameterError("canonical generator needs k >= 2");
  if (domain == Domain::Positive) {
    throw ParameterError("canonical generator is defined on above-one or unit only");
  }
  if (domain == Domain::AboveOne && c < 0.0) {
    throw ParameterError("canonical generator on (1,+inf) needs c > 0");
  }
  if (domain == Domain::UnitInterval && c > 0.0) {
    throw ParameterError("canonical generator on (0,1) needs c < 0");
  }
  Generator g = power_log_generator(c, 1.0 / (k - 1), domain);
  return Generator("canonical(c=" + detail::fmt_param(c) + ",k=" + std::to_string(k) + ")",
                   domain, Sign::Positive,
                   [g](double x) { return g(x); },
                   [g](double s) { return g.at_log(s); },
                   [g](double s) { return g.log_abs_at_log(s); });
}

// x -> a x + b. The sign is read off the closed hull of the domain; an
// affine map that changes sign there is rejected.
inline Generator affine_generator(double a, double b,
                                  Domain domain = Domain::AboveOne) {
  if (!std::isfinite(a) || !std::isfinite(b)) throw ParameterError("affine needs finite a, b");
  // value at the lower end and the direction at the upper end
  double lo = 0.0, hi = 0.0;
  switch (domain) {
    case Domain::AboveOne:
      lo = a + b;
      hi = a != 0.0 ? a : b;
      break;
    case Domain::UnitInterval:
      lo = b;
      hi = a + b;
      break;
    case Domain::Positive:
      lo = b;
      hi = a != 0.0 ? a : b;
      break;
  }
  Sign sign;
  if (lo >= 0.0 && hi >= 0.0 && (lo > 0.0 || hi > 0.0)) {
    sign = Sign::Positive;
  } else if (lo <= 0.0 && hi <= 0.0 && (lo < 0.0 || hi < 0.0)) {
    sign = Sign::Negative;
  } else {
    throw ParameterError("affine generator changes sign on " + std::string(name(domain)));
  }
  return Generator("affine(a=" + detail::fmt_param(a) + ",b=" + detail::fmt_param(b) + ")",
                   domain, sign, [a, b](double x) { return a * x + b; });
}

// c * f, keeping the log-argument entry points of f.
inline Generator scaled(const Generator& f, double c) {
  if (c == 0.0 || !std::isfinite(c)) throw ParameterError("scale factor must be finite and nonzero");
  const Sign sign = (c > 0.0) == (f.sign() == Sign::Positive) ? Sign::Positive
                                                               : Sign::Negative;
  Generator::Function at_log, log_abs;
  if (f.has_log_entry()) at_log = [f, c](double s) { return c * f.at_log(s); };
  if (f.has_log_abs_entry()) {
    log_abs = [f, c](double s) { return std::log(std::abs(c)) + f.log_abs_at_log(s); };
  }
  return Generator(detail::fmt_param(c) + "*" + f.label(), f.domain(), sign,
                   [f, c](double x) { return c * f(x); }, at_log, log_abs);
}

// Spot-checks the declared sign on `count` seeded points of the domain.
// Returns the number of points where the value is non-finite, zero, or of
// the wrong sign.
inline std::size_t count_sign_violations(const Generator& f, std::size_t count,
                                         std::uint64_t seed) {
  std::size_t bad = 0;
  for (std::uint64_t i = 0; i < count; ++i) {
    SampleStream rng(seed, i);
    const double x = sample_tuple(f.domain(), 1, rng, shape_for(i))[0];
    double v = 0.0;
    try {
      v = f(x);
    } catch (const Error&) {
      ++bad;
      continue;
    }
    const bool ok = std::isfinite(v) &&
                    (f.sign() == Sign::Positive ? v > 0.0 : v < 0.0);
    if (!ok) ++bad;
  }
  return bad;
}

}  // namespace lcq

#endif  // LCQ_GENERATOR_HPP
