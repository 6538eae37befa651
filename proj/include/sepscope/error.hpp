// Copyright 2026 The sepscope Authors
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

#ifndef SEPSCOPE_ERROR_HPP
#define SEPSCOPE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace sepscope {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Wrong shape or dimension, malformed input.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A matrix failed one of the density-matrix invariants.
class InvalidState : public Error {
 public:
  using Error::Error;
};

/// A scalar argument outside its allowed interval.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation (odd qubit
/// count for the Werner construction, empty bipartition, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Problem size above a memory guard.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A decomposition carries negative weights and cannot be read as a mixture.
class NotACertificate : public Error {
 public:
  using Error::Error;
};

/// Tetrahedron vertices violating the frame conditions.
class FrameError : public Error {
 public:
  using Error::Error;
};

}  // namespace sepscope

#endif  // SEPSCOPE_ERROR_HPP
