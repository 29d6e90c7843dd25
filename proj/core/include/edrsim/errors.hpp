// Copyright 2026 The edrsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EDRSIM_ERRORS_HPP
#define EDRSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace edrsim {

/// Bad user input: out-of-range parameter, malformed config, basis mismatch.
/// Mapped to exit code 1 by the CLI.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// File system / parse-level failures. Mapped to exit code 2 by the CLI.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numerical failures (e.g. an indefinite covariance fed to the Cholesky
/// factorizer). Mapped to exit code 3 by the CLI.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace edrsim

#endif  // EDRSIM_ERRORS_HPP
