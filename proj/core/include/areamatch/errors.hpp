// Copyright 2026 The AreaMatch Authors.
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

#ifndef AREAMATCH_ERRORS_HPP_
#define AREAMATCH_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace areamatch {

// Base class for every error raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A polygon (or point set) without usable area.
struct DegeneratePolygon : Error {
  using Error::Error;
};

// File could not be read or written.
struct IoError : Error {
  using Error::Error;
};

// File contents violate the expected format or schema.
struct FormatError : Error {
  using Error::Error;
};

// Invalid parameter or option value.
struct ConfigError : Error {
  using Error::Error;
};

// Numeric input outside the mathematical domain of an operation.
struct DomainError : Error {
  using Error::Error;
};

// Grid map contains no free space to segment.
struct EmptyMapError : Error {
  using Error::Error;
};

// An area graph with zero areas where at least one is required.
struct EmptyGraphError : Error {
  using Error::Error;
};

// Rotation clustering was asked to run on an empty hypothesis list.
struct NoHypothesesError : Error {
  using Error::Error;
};

// Per-stage counts carried by MatchFailed so callers can see where the
// pipeline ran dry.
struct MatchDiagnostics {
  std::size_t areas_a = 0;
  std::size_t areas_b = 0;
  std::size_t mutual_pairs = 0;
  std::size_t verified_pairs = 0;
  std::size_t hypotheses = 0;
  std::size_t clusters = 0;
};

// The matching pipeline could not produce a transform.
class MatchFailed : public Error {
 public:
  MatchFailed(const std::string& what, MatchDiagnostics diagnostics)
      : Error(what), diagnostics_(diagnostics) {}

  const MatchDiagnostics& diagnostics() const { return diagnostics_; }

 private:
  MatchDiagnostics diagnostics_;
};

}  // namespace areamatch

#endif  // AREAMATCH_ERRORS_HPP_
