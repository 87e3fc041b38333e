// Copyright 2026 The qtele Authors
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

namespace qtele {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes or dimensions that do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Non-finite entries or otherwise malformed numeric input.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

/// A state that must be normalized is not.
class NormalizationError : public Error {
 public:
  using Error::Error;
};

/// An operator basis with the wrong number or shape of elements, or one that
/// fails validation.
class StructureError : public Error {
 public:
  using Error::Error;
};

/// Bad experiment configuration (sample counts, missing files, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Violated internal invariant; indicates a bug rather than bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace qtele
