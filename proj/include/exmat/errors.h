// Copyright 2026 The Authors.
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

#ifndef EXMAT_ERRORS_H_
#define EXMAT_ERRORS_H_

#include <stdexcept>
#include <string>

namespace exmat {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument refers to something outside the object it is applied to, e.g.
// an element that is not in the ground set, or classes that do not partition
// a base.
class DomainError : public Error {
 public:
  using Error::Error;
};

// The caller violated a documented precondition (dependent set passed where an
// independent one is required, a set that is not a basis, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A certificate produced by the library failed to validate. The exchange
// theorems guarantee success, so this always indicates a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

// Malformed input documents.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace exmat

#endif  // EXMAT_ERRORS_H_
