// Copyright 2026 The Vicinal Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace vicinal {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two points (or a point and a cap) live in spheres of different dimension.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// An argument violates an operation's precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An iterative solver hit its iteration cap without meeting its tolerance.
class SolverError : public Error {
 public:
  using Error::Error;
};

/// A configuration file or command line could not be turned into a valid run.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace vicinal
