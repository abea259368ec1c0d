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

#ifndef LCQ_FUNCEQ_HPP
#define LCQ_FUNCEQ_HPP

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <istream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "lcq/error.hpp"
#include "lcq/generator.hpp"

// Solutions of the reflexivity equation f(x) = (x/k) f(x^k) on (1,+inf),
// built from arbitrary data f0 on a fundamental interval [p, p^k). Tile n
// is [p^(k^n), p^(k^(n+1))) and on it
//
//   f(x) = k^n x^((k^-n - 1)/(k - 1)) f0(x^(k^-n)).

namespace lcq {

// Piecewise-linear interpolant in log x through strictly increasing
// abscissae. Evaluation outside [front, back] is an error.
class TabulatedFunction {
 public:
  TabulatedFunction(std::vector<double> x, std::vector<double> f)
      : x_(std::move(x)), f_(std::move(f)) {
    if (x_.size() != f_.size()) throw ParameterError("table columns differ in length");
    if (x_.size() < 2) throw ParameterError("table needs at least 2 rows");
    for (std::size_t i = 0; i < x_.size(); ++i) {
      if (!std::isfinite(x_[i]) || !(x_[i] > 0.0) || !std::isfinite(f_[i])) {
        throw ParameterError("table row " + std::to_string(i + 1) +
                             " needs finite x > 0 and finite f");
      }
      if (i > 0 && !(x_[i] > x_[i - 1])) {
        throw ParameterError("table abscissae must be strictly increasing (row " +
                             std::to_string(i + 1) + ")");
      }
    }
    log_x_.resize(x_.size());
    std::transform(x_.begin(), x_.end(), log_x_.begin(), [](double v) { return std::log(v); });
  }

  double operator()(double x) const {
    if (!(x >= x_.front() && x <= x_.back())) {
      throw InterpolationError("table evaluated outside [" + std::to_string(x_.front()) +
                                   ", " + std::to_string(x_.back()) + "]",
                               x);
    }
    const auto it = std::upper_bound(x_.begin(), x_.end(), x);
    if (it == x_.end()) return f_.back();
    const std::size_t hi = static_cast<std::size_t>(it - x_.begin());
    const std::size_t lo = hi - 1;
    if (x == x_[lo]) return f_[lo];
    const double t = (std::log(x) - log_x_[lo]) / (log_x_[hi] - log_x_[lo]);
    return f_[lo] + t * (f_[hi] - f_[lo]);
  }

  const std::vector<double>& abscissae() const noexcept { return x_; }
  const std::vector<double>& values() const noexcept { return f_; }

 private:
  std::vector<double> x_;
  std::vector<double> f_;
  std::vector<double> log_x_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

inline double parse_real(std::string_view text, std::size_t line, const char* what) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ParseError("cannot parse " + std::string(what) + " '" + std::string(text) + "'", line);
  }
  return v;
}

}  // namespace detail

// Reads the table format: UTF-8 CSV with header `x,f`, then one `x,f` row
// per line with x strictly increasing. Blank lines are skipped.
inline TabulatedFunction read_table_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool header = false;
  std::vector<double> xs, fs;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    if (line_no == 1 && view.substr(0, 3) == "\xEF\xBB\xBF") view.remove_prefix(3);
    view = detail::trim(view);
    if (view.empty()) continue;
    if (!header) {
      if (view != "x,f") throw ParseError("expected header 'x,f'", line_no);
      header = true;
      continue;
    }
    const auto comma = view.find(',');
    if (comma == std::string_view::npos || view.find(',', comma + 1) != std::string_view::npos) {
      throw ParseError("expected exactly two fields", line_no);
    }
    const double x = detail::parse_real(view.substr(0, comma), line_no, "x");
    const double f = detail::parse_real(view.substr(comma + 1), line_no, "f");
    if (!xs.empty() && !(x > xs.back())) {
      throw ParseError("x must be strictly increasing", line_no);
    }
    xs.push_back(x);
    fs.push_back(f);
  }
  if (!header) throw ParseError("empty table: missing header 'x,f'", line_no);
  if (xs.size() < 2) throw ParseError("table needs at least 2 rows", line_no);
  return TabulatedFunction(std::move(xs), std::move(fs));
}

inline TabulatedFunction load_table_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open table file '" + path + "'");
  return read_table_csv(in);
}

// Which tiles the extension covers: every n in Z, i.e. all of (1,+inf), or
// n >= 0 only, i.e. [p,+inf).
enum class TileRange { AboveOne, FromBase };

// Default cap on |n|.
inline constexpr long long kDefaultMaxTile = 64;

class TiledExtension {
 public:
  using Function = std::function<double(double)>;

  TiledExtension(double p, int k, Function f0, Sign sign,
                 TileRange range = TileRange::AboveOne)
      : p_(p), k_(k), f0_(std::move(f0)), sign_(sign), range_(range) {
    validate();
  }

  // f0 given by a table on [p, p^k); the sign is read off the values.
  TiledExtension(double p, int k, const TabulatedFunction& table,
                 TileRange range = TileRange::AboveOne)
      : p_(p), k_(k), f0_(table), sign_(Sign::Positive), range_(range) {
    validate();
    const auto& fs = table.values();
    const bool pos = std::all_of(fs.begin(), fs.end(), [](double v) { return v > 0.0; });
    const bool neg = std::all_of(fs.begin(), fs.end(), [](double v) { return v < 0.0; });
    if (!pos && !neg) throw ParameterError("table values must be all positive or all negative");
    sign_ = pos ? Sign::Positive : Sign::Negative;
    const auto& xs = table.abscissae();
    if (xs.front() < p_ || !(xs.back() < upper())) {
      throw ParameterError("table abscissae must lie in [p, p^k) = [" + std::to_string(p_) +
                           ", " + std::to_string(upper()) + ")");
    }
  }

  double p() const noexcept { return p_; }
  double log_p() const noexcept { return log_p_; }
  int k() const noexcept { return k_; }
  Sign sign() const noexcept { return sign_; }
  TileRange range() const noexcept { return range_; }
  // p^k, the open right end of the fundamental interval.
  double upper() const noexcept { return std::pow(p_, k_); }
  double f0(double y) const { return f0_(y); }

  long long max_tile() const noexcept { return max_tile_; }
  void set_max_tile(long long cap) {
    if (cap < 0) throw ParameterError("tile cap must be >= 0");
    max_tile_ = cap;
  }

 private:
  void validate() {
    if (!(p_ > 1.0) || !std::isfinite(p_)) throw ParameterError("base point p must be > 1");
    if (k_ < 2) throw ParameterError("k must be >= 2");
    if (!f0_) throw ParameterError("missing f0");
    log_p_ = std::log(p_);
  }

  double p_;
  double log_p_ = 0.0;
  int k_;
  Function f0_;
  Sign sign_;
  TileRange range_;
  long long max_tile_ = kDefaultMaxTile;
};

struct TileLocation {
  long long n = 0;
  // log x fell within the snapping tolerance of the lower boundary of
  // tile n and was assigned to tile n.
  bool on_boundary = false;
};

namespace detail {

inline double tile_scale(int k, long long n) {
  return std::pow(static_cast<double>(k), static_cast<double>(n));
}

// Boundary snapping tolerance in log space: 1e-15 relative in x, widened to a
// few ulps of the boundary's logarithm where that is coarser, and never more
// than a quarter of the tile just below the boundary.
inline double boundary_tolerance(double log_boundary, int k) {
  const double base =
      std::max(1e-15, 4.0 * std::numeric_limits<double>::epsilon() * std::abs(log_boundary));
  return std::min(base, 0.25 * log_boundary * (1.0 - 1.0 / k));
}

}  // namespace detail

// Tile of a point given by s = log x > 0: the n with
// k^n log p <= s < k^(n+1) log p.
inline TileLocation locate_tile(double log_x, double log_p, int k) {
  if (!(log_x > 0.0) || !std::isfinite(log_x)) throw DomainError("tile index needs x > 1", std::exp(log_x));
  if (!(log_p > 0.0)) throw ParameterError("tile index needs p > 1");
  if (k < 2) throw ParameterError("tile index needs k >= 2");
  const double guess = std::floor(std::log(log_x / log_p) / std::log(static_cast<double>(k)));
  if (!std::isfinite(guess) || std::abs(guess) > 1e6) {
    throw RangeError("tile index out of range", static_cast<long long>(guess));
  }
  TileLocation loc{static_cast<long long>(guess), false};
  for (int pass = 0; pass < 3; ++pass) {
    const double lower = detail::tile_scale(k, loc.n) * log_p;
    const double upper = detail::tile_scale(k, loc.n + 1) * log_p;
    if (std::abs(log_x - lower) <= detail::boundary_tolerance(lower, k)) {
      loc.on_boundary = true;
      break;
    }
    if (std::abs(log_x - upper) <= detail::boundary_tolerance(upper, k)) {
      ++loc.n;
      loc.on_boundary = true;
      break;
    }
    if (log_x < lower) {
      --loc.n;
    } else if (log_x >= upper) {
      ++loc.n;
    } else {
      break;
    }
  }
  return loc;
}

inline long long tile_index(double x, double p, int k) {
  if (!(x > 1.0) || !std::isfinite(x)) throw DomainError("tile index needs finite x > 1", x);
  if (!(p > 1.0) || !std::isfinite(p)) throw ParameterError("tile index needs p > 1");
  return locate_tile(std::log(x), std::log(p), k).n;
}

namespace detail {

struct TileEvaluation {
  long long n;
  double log_factor;  // n log k + ((k^-n - 1)/(k - 1)) log x
  double factor;      // exp(log_factor), may be 0 or inf
  double y;           // x^(k^-n) clamped into [p, p^k)
};

inline TileEvaluation reduce_to_base(const TiledExtension& ext, double log_x) {
  if (!(log_x > 0.0)) throw DomainError("extension is defined for x > 1", std::exp(log_x));
  const int k = ext.k();
  const TileLocation loc = locate_tile(log_x, ext.log_p(), k);
  const long long n = loc.n;
  if (ext.range() == TileRange::FromBase && n < 0) {
    throw DomainError("extension from base covers [p,+inf) only", std::exp(log_x));
  }
  const double overflow_limit = 1023.0 * std::log(2.0) / std::log(static_cast<double>(k));
  if (std::llabs(n) > ext.max_tile() || static_cast<double>(std::llabs(n)) > overflow_limit) {
    throw RangeError("tile index " + std::to_string(n) + " exceeds the representable range", n);
  }
  const double kn = tile_scale(k, n);
  const double kinv = tile_scale(k, -n);
  const double exponent = ((kinv - 1.0) / (k - 1)) * log_x;
  TileEvaluation te;
  te.n = n;
  te.log_factor = static_cast<double>(n) * std::log(static_cast<double>(k)) + exponent;
  te.factor = kn * std::exp(exponent);
  if (!std::isnormal(te.factor)) te.factor = std::exp(te.log_factor);
  const double upper = ext.upper();
  te.y = std::clamp(std::exp(kinv * log_x), ext.p(), std::nextafter(upper, 0.0));
  return te;
}

}  // namespace detail

// f(e^s) for the extension, s = log x.
inline double extend_at_log(const TiledExtension& ext, double log_x) {
  const auto te = detail::reduce_to_base(ext, log_x);
  if (te.n == 0) return ext.f0(te.y);
  return te.factor * ext.f0(te.y);
}

// The extension at x > 1. On the fundamental interval itself this is f0(x)
// with no arithmetic applied.
inline double extend(const TiledExtension& ext, double x) {
  if (!(x > 1.0) || !std::isfinite(x)) throw DomainError("extension is defined for finite x > 1", x);
  if (x >= ext.p() && x < ext.upper()) return ext.f0(x);
  return extend_at_log(ext, std::log(x));
}

// log|f(e^s)|, usable on tiles whose points or values are not representable.
inline double extend_log_abs(const TiledExtension& ext, double log_x) {
  const auto te = detail::reduce_to_base(ext, log_x);
  const double v = ext.f0(te.y);
  if (v == 0.0 || !std::isfinite(v)) {
    throw EvaluationError("f0 vanishes or is not finite at " + std::to_string(te.y));
  }
  return te.log_factor + std::log(std::abs(v));
}

struct ContinuityReport {
  // |lim_{y -> p^k-} f0(y) - (k/p) f0(p)|, absent when the one-sided limit
  // estimate does not stabilize or cannot be evaluated.
  std::optional<double> defect;
  double limit_estimate = std::numeric_limits<double>::quiet_NaN();
  double target = std::numeric_limits<double>::quiet_NaN();
  std::string note;

  bool continuous(double tol = 1e-10) const { return defect && *defect < tol; }
};

// Gluing defect of the extension across tile boundaries. The left limit at
// p^k is estimated along p^k (1 - 2^-j), j = 20..40, and accepted when the
// last three estimates agree to 1e-8 relative.
inline ContinuityReport continuity_defect(const TiledExtension& ext) {
  ContinuityReport report;
  try {
    report.target = static_cast<double>(ext.k()) / ext.p() * ext.f0(ext.p());
    const double upper = ext.upper();
    std::vector<double> estimates;
    for (int j = 20; j <= 40; ++j) {
      estimates.push_back(ext.f0(upper * (1.0 - std::ldexp(1.0, -j))));
    }
    const std::size_t n = estimates.size();
    report.limit_estimate = estimates.back();
    const double scale = 1e-8 * std::max(std::abs(report.limit_estimate),
                                         std::numeric_limits<double>::min());
    if (std::abs(estimates[n - 1] - estimates[n - 2]) <= scale &&
        std::abs(estimates[n - 2] - estimates[n - 3]) <= scale) {
      report.defect = std::abs(report.limit_estimate - report.target);
    } else {
      report.note = "left limit at p^k did not stabilize";
    }
  } catch (const InterpolationError& e) {
    report.note = std::string("left limit at p^k not evaluable: ") + e.what();
  }
  return report;
}

// f(x) - (x/k) f(x^k), with f(x^k) taken through the log-argument entry
// point when the generator has one.
inline double reflexivity_residual(const Generator& f, double x, int k) {
  if (!(x > 1.0)) throw DomainError("reflexivity residual needs x > 1", x);
  if (k < 2) throw ParameterError("k must be >= 2");
  return f(x) - (x / k) * f.at_log(k * std::log(x));
}

inline double reflexivity_residual(const TiledExtension& ext, double x, int k) {
  if (!(x > 1.0)) throw DomainError("reflexivity residual needs x > 1", x);
  if (k < 2) throw ParameterError("k must be >= 2");
  return extend(ext, x) - (x / k) * extend_at_log(ext, k * std::log(x));
}

inline double reflexivity_residual(const TiledExtension& ext, double x) {
  return reflexivity_residual(ext, x, ext.k());
}

// The extension as a generator on (1,+inf), with log-argument entry points.
inline Generator as_generator(const TiledExtension& ext, std::string label = "tiled") {
  if (ext.range() != TileRange::AboveOne) {
    throw ParameterError("only extensions covering (1,+inf) can act as generators");
  }
  return Generator(std::move(label), Domain::AboveOne, ext.sign(),
                   [ext](double x) { return extend(ext, x); },
                   [ext](double s) { return extend_at_log(ext, s); },
                   [ext](double s) { return extend_log_abs(ext, s); });
}

}  // namespace lcq

#endif  // LCQ_FUNCEQ_HPP
