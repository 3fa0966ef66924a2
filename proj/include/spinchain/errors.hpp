// Copyright 2026 The spinchain Authors
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

#ifndef SPINCHAIN_ERRORS_HPP
#define SPINCHAIN_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spinchain {

/// Out-of-range index, malformed matrix, or otherwise invalid argument.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called with an environment model it does not handle.
class UsageError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Feature restricted to a chain size the implementation does not cover.
class UnsupportedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The integrator produced a non-finite entry.
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(std::size_t step, double tau)
      : std::runtime_error("integration diverged at step " +
                           std::to_string(step) + " (tau = " +
                           std::to_string(tau) + ")"),
        step_(step) {}

  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

/// Configuration error. `line()` is 0 when the error is not tied to a line.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::size_t line, const std::string& message)
      : std::runtime_error(line == 0 ? message
                                     : "line " + std::to_string(line) + ": " +
                                           message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace spinchain

#endif  // SPINCHAIN_ERRORS_HPP
