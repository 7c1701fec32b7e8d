// Copyright 2026 The gptbox Authors
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

#ifndef GPTBOX_ERRORS_HPP
#define GPTBOX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gptbox {

/// Base class for all gptbox errors.
struct Error : std::runtime_error {
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

/// Vector/matrix/alphabet sizes do not line up.
struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string &msg) : Error(msg) {}
};

/// Two scalars live in incompatible quadratic fields (different k, both irrational).
struct FieldMismatch : Error {
  explicit FieldMismatch(const std::string &msg) : Error(msg) {}
};

/// An interval-valued quantity straddles a decision boundary by more than the
/// certification width, so no honest verdict can be given at this precision.
struct Indeterminate : Error {
  explicit Indeterminate(const std::string &msg) : Error(msg) {}
};

struct DivisionByZero : Error {
  explicit DivisionByZero(const std::string &msg) : Error(msg) {}
};

/// Objects tied to different systems were combined.
struct SystemMismatch : Error {
  explicit SystemMismatch(const std::string &msg) : Error(msg) {}
};

/// Input to a decider violates a stated precondition.
struct PreconditionError : Error {
  explicit PreconditionError(const std::string &msg) : Error(msg) {}
};

struct ImpureInput : PreconditionError {
  explicit ImpureInput(const std::string &msg) : PreconditionError(msg) {}
};

struct NonOrthogonalInput : PreconditionError {
  explicit NonOrthogonalInput(const std::string &msg) : PreconditionError(msg) {}
};

struct NonSpikyInput : PreconditionError {
  explicit NonSpikyInput(const std::string &msg) : PreconditionError(msg) {}
};

struct NotNormalized : PreconditionError {
  explicit NotNormalized(const std::string &msg) : PreconditionError(msg) {}
};

struct InputNotDistinguishable : PreconditionError {
  explicit InputNotDistinguishable(const std::string &msg) : PreconditionError(msg) {}
};

struct PureOnly : PreconditionError {
  explicit PureOnly(const std::string &msg) : PreconditionError(msg) {}
};

/// A hierarchy level or graph power would exceed the configured resource cap.
struct ResourceCapExceeded : Error {
  explicit ResourceCapExceeded(const std::string &msg) : Error(msg) {}
};

/// Malformed input file.
struct ParseError : Error {
  explicit ParseError(const std::string &msg) : Error(msg) {}
};

}  // namespace gptbox

#endif  // GPTBOX_ERRORS_HPP
