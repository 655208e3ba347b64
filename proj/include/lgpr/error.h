// Copyright 2026 The lgpr Authors.
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

#ifndef LGPR_ERROR_H_
#define LGPR_ERROR_H_

#include <stdexcept>
#include <string>

namespace lgpr {

// Base class for every error raised by the library. Each subclass maps onto
// one command-line exit code (see cli.h).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller-supplied argument is out of range or inconsistent.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Malformed or unreadable input file.
class IoError : public Error {
 public:
  using Error::Error;
};

// The data cannot support the requested quantity: zero degrees, zero volume,
// empty proxy sets, constant score vectors.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

// Nodes that must reach each other do not.
class ConnectivityError : public Error {
 public:
  using Error::Error;
};

// A factorization failed or a quantity that is non-negative in exact
// arithmetic came out clearly negative.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace lgpr

#endif  // LGPR_ERROR_H_
