// Copyright 2026 The twostep Authors
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

namespace twostep {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A tour that is not a permutation of the cities.
class InvalidTourError : public Error {
 public:
  using Error::Error;
};

/// A bitstring whose length does not match the layout.
class LengthError : public Error {
 public:
  using Error::Error;
};

/// A request beyond what the implementation supports (city count, qubits).
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// An operation needed data that the input does not carry.
class MissingDataError : public Error {
 public:
  using Error::Error;
};

/// No embedded phase dataset exists for the requested city count.
class NoBuiltinError : public Error {
 public:
  using Error::Error;
};

/// Mismatched register widths or matrix shapes.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent input data (phase files, gates, arguments).
class DataError : public Error {
 public:
  using Error::Error;
};

/// File system failures.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace twostep
