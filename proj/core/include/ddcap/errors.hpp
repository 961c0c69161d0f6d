// SPDX-License-Identifier: Apache-2.0
//
// ddcap: capacity of doubly-dispersive Gaussian channels
// Copyright (C) 2026 The ddcap authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>

namespace ddcap {

// All library failures derive from Error. The CLI maps the concrete type
// to a process exit code (see tools/ddcap.cpp).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad configuration: unknown symbol family, malformed grid, schema violation.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what, std::string field = {})
      : Error(field.empty() ? what : field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// Grid too coarse for the frequency truncation (2 * h_x * omega_max > 1).
class AliasingError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

// Requested operation is not defined for this kind of symbol.
class UnsupportedError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

// Argument outside the mathematical domain (negative power, eps <= 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Caller broke an operation contract (non-Hermitian input, grid mismatch).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Numerical failure: solver did not converge, no positive eigenvalue, strongly negative spectrum.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Input file missing or unreadable.
class ReadError : public Error {
 public:
  using Error::Error;
};

// Output path not writable.
class WriteError : public Error {
 public:
  using Error::Error;
};

}  // namespace ddcap
