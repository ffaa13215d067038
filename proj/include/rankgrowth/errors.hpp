// Copyright 2026 The rankgrowth Authors.
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

#ifndef RANKGROWTH_ERRORS_HPP
#define RANKGROWTH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rankgrowth {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or uninterpretable input (wrong lengths, unknown elements, bad
/// configuration).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition was violated by the caller.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// An operator could not be applied, e.g. a vertex map is undefined or a
/// lazily generated structure was asked for an index past its limit.
class MapError : public InputError {
 public:
  using InputError::InputError;
};

/// Input that is well formed but outside what the library handles, such as a
/// relation with more than one term.
class UnsupportedInputError : public InputError {
 public:
  using InputError::InputError;
};

/// A user supplied circuit family does not define a matroid.
class InvalidMatroidError : public InputError {
 public:
  using InputError::InputError;
};

/// Sampled evidence contradicts a declared hypothesis on the operator system
/// (non-commutation, failure of the triangularity inequality, or a table that
/// is not decreasing).  The message carries a concrete witness.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

}  // namespace rankgrowth

#endif  // RANKGROWTH_ERRORS_HPP
