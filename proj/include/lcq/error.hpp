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

#ifndef LCQ_ERROR_HPP
#define LCQ_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lcq {

// Base of every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument lies outside the domain of the operation. Carries the
// offending value so front ends can echo it back.
class DomainError : public Error {
 public:
  DomainError(const std::string& what, double offending)
      : Error(what), offending_(offending) {}
  explicit DomainError(const std::string& what) : Error(what) {}

  double offending() const noexcept { return offending_; }

 private:
  double offending_ = 0.0;
};

class ArityError : public Error {
 public:
  using Error::Error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

// A function evaluation produced zero, a wrong sign, or a non-finite value.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

// Exponent towers or tile indices beyond what a double can represent.
class RangeError : public Error {
 public:
  RangeError(const std::string& what, long long tile)
      : Error(what), tile_(tile) {}
  explicit RangeError(const std::string& what) : Error(what) {}

  long long tile() const noexcept { return tile_; }

 private:
  long long tile_ = 0;
};

// Evaluation of a tabulated function outside its abscissa hull.
class InterpolationError : public Error {
 public:
  InterpolationError(const std::string& what, double at)
      : Error(what), at_(at) {}

  double at() const noexcept { return at_; }

 private:
  double at_;
};

// Malformed input text (table files, generator specs). `line` is 1-based,
// 0 when not applicable.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line ? what + " (line " + std::to_string(line) + ")" : what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace lcq

#endif  // LCQ_ERROR_HPP
