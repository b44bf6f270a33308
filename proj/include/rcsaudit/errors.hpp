// Copyright 2026 The rcsaudit Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace rcsaudit {

// Base class for all toolkit errors. The CLI maps these to exit code 2.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A qubit / qubit pair has no entry in a component error table.
struct MissingComponentError : Error {
  using Error::Error;
};

// Input value outside its documented domain (probability bounds, counts, ...).
struct DomainError : Error {
  using Error::Error;
};

// Malformed input file; carries the 1-based line number when known.
struct ParseError : Error {
  ParseError(const std::string& what, long line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_number(line) {}
  long line_number;
};

// A shipped fixture does not match its checksum manifest.
struct CorruptedFixtureError : Error {
  using Error::Error;
};

// A sample set lacks the ideal probabilities an estimator requires.
struct MissingAmplitudesError : Error {
  using Error::Error;
};

// restricted-mode mean over an empty selection
struct EmptySelectionError : Error {
  using Error::Error;
};

// regression design matrix is singular (all depths equal)
struct DegenerateDesignError : Error {
  using Error::Error;
};

// simulator: gate fails the unitarity check
struct NonUnitaryGateError : Error {
  using Error::Error;
};

}  // namespace rcsaudit
