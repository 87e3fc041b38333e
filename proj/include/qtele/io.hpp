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

#include <filesystem>
#include <string>

#include "qtele/bases.hpp"
#include "qtele/qlinalg.hpp"

namespace qtele::io {

// JSON file formats. Complex scalars are [re, im]; matrices are row-major
// nested arrays.
//
//   basis file: {"d": 2, "elements": [[[[re, im], ...], ...], ...]}
//   state file: {"d": 2, "amplitudes": [[re, im], ...]}
//
// A state file holds d amplitudes for a single-system state or d^2 for a
// bipartite vector (index j*d + k).

struct StateFile {
  Eigen::Index d = 0;
  ComplexVector amplitudes;
};

/// Throws ConfigError for unreadable or malformed files and StructureError
/// for a basis with the wrong element count or shape.
OperatorBasis read_basis_file(const std::filesystem::path& path);
StateFile read_state_file(const std::filesystem::path& path);

void write_basis_file(const std::filesystem::path& path, const OperatorBasis& basis);
void write_state_file(
    const std::filesystem::path& path, Eigen::Index d, const ComplexVector& amplitudes);

/// Parsing from in-memory JSON text; same errors as the file readers.
OperatorBasis parse_basis(const std::string& text);
StateFile parse_state(const std::string& text);

std::string basis_to_json(const OperatorBasis& basis);
std::string state_to_json(Eigen::Index d, const ComplexVector& amplitudes);

/// %.17g, enough digits to round-trip any double.
std::string format_double(double x);

}  // namespace qtele::io
