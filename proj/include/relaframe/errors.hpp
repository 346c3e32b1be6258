// Copyright 2026 The Relaframe Authors
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

#ifndef RELAFRAME_ERRORS_HPP_
#define RELAFRAME_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <vector>

namespace relaframe {

// Base class for every error raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operand shapes are incompatible (wrong dimension, wrong factor count).
class ShapeError : public Error {
 public:
  using Error::Error;
};

// A constructed value violates one of its declared invariants
// (non-hermitian state, effects not summing to identity, ...).
class InvariantError : public Error {
 public:
  using Error::Error;
};

// Truncated expansion dropped more weight than the configured bound allows.
class TruncationError : public Error {
 public:
  using Error::Error;
};

// A uniform angular grid is too coarse to integrate the integrand exactly.
class QuadratureError : public Error {
 public:
  using Error::Error;
};

// An operation was asked to aggregate over an empty selection of bins.
class EmptySelectionError : public Error {
 public:
  using Error::Error;
};

// A localisation sequence is empty or otherwise unusable.
class SequenceError : public Error {
 public:
  using Error::Error;
};

// Input document is not syntactically well formed.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Input document is well formed but violates the config schema. Carries
// every violation found, not just the first.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> issues)
      : Error(join(issues)), issues_(std::move(issues)) {}

  const std::vector<std::string>& issues() const { return issues_; }

 private:
  static std::string join(const std::vector<std::string>& issues) {
    std::string msg = "config validation failed:";
    for (const auto& issue : issues) {
      msg += "\n  - " + issue;
    }
    return msg;
  }

  std::vector<std::string> issues_;
};

// Domain error re-raised with the experiment that triggered it attached.
class ExperimentError : public Error {
 public:
  using Error::Error;
};

}  // namespace relaframe

#endif  // RELAFRAME_ERRORS_HPP_
