// Copyright 2026 The QCGAN Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace qcgan {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad arguments: index collisions, dimension mismatches, malformed specs.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A request exceeds a size guard (qubit count, image size).
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A numeric procedure failed to converge or produced non-finite values.
class NumericError : public Error {
 public:
  NumericError(const std::string& what, double residual = 0.0)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// Malformed file content or an I/O failure.
class FormatError : public Error {
 public:
  FormatError(const std::string& what, int line = 0) : Error(what), line_(line) {}
  /// 1-based line number of the offending input, 0 when not line-oriented.
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace qcgan
