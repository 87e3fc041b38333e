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

#include "qtele/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qtele/errors.hpp"

namespace qtele::io {

namespace {

using nlohmann::json;

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void dump(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path.string());
  out << text;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
}

Complex to_complex(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ConfigError("complex scalar must be a [re, im] pair of numbers");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Eigen::Index read_dim(const json& root) {
  if (!root.is_object() || !root.contains("d") || !root["d"].is_number_integer()) {
    throw ConfigError("missing integer field \"d\"");
  }
  const auto d = root["d"].get<std::int64_t>();
  if (d <= 0) throw ConfigError("\"d\" must be positive");
  return static_cast<Eigen::Index>(d);
}

ComplexMatrix to_matrix(const json& j, Eigen::Index d, std::size_t which) {
  const std::string where = "element " + std::to_string(which);
  if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != d) {
    throw StructureError(where + " must have " + std::to_string(d) + " rows");
  }
  ComplexMatrix m(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != d) {
      throw StructureError(where + " must have " + std::to_string(d) + " columns");
    }
    for (Eigen::Index c = 0; c < d; ++c) {
      m(r, c) = to_complex(row[static_cast<std::size_t>(c)]);
    }
  }
  return m;
}

void append_complex(std::string& out, Complex z) {
  out += '[';
  out += format_double(z.real());
  out += ", ";
  out += format_double(z.imag());
  out += ']';
}

}  // namespace

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

OperatorBasis parse_basis(const std::string& text) {
  const json root = parse_json(text);
  const Eigen::Index d = read_dim(root);
  if (!root.contains("elements") || !root["elements"].is_array()) {
    throw ConfigError("basis file needs an \"elements\" array");
  }
  std::vector<ComplexMatrix> elements;
  const json& list = root["elements"];
  elements.reserve(list.size());
  for (std::size_t i = 0; i < list.size(); ++i) {
    elements.push_back(to_matrix(list[i], d, i));
  }
  return OperatorBasis(d, std::move(elements), BasisKind::Custom);
}

StateFile parse_state(const std::string& text) {
  const json root = parse_json(text);
  StateFile out;
  out.d = read_dim(root);
  if (!root.contains("amplitudes") || !root["amplitudes"].is_array()) {
    throw ConfigError("state file needs an \"amplitudes\" array");
  }
  const json& amps = root["amplitudes"];
  const auto n = static_cast<Eigen::Index>(amps.size());
  if (n != out.d && n != out.d * out.d) {
    throw ConfigError(
        "state file has " + std::to_string(n) + " amplitudes; expected d or d^2");
  }
  out.amplitudes.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.amplitudes[i] = to_complex(amps[static_cast<std::size_t>(i)]);
  }
  return out;
}

OperatorBasis read_basis_file(const std::filesystem::path& path) {
  return parse_basis(slurp(path));
}

StateFile read_state_file(const std::filesystem::path& path) {
  return parse_state(slurp(path));
}

std::string basis_to_json(const OperatorBasis& basis) {
  std::string out = "{\"d\": " + std::to_string(basis.local_dim()) + ", \"elements\": [";
  for (std::size_t xi = 0; xi < basis.size(); ++xi) {
    if (xi) out += ", ";
    out += '[';
    const auto& m = basis[xi];
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r) out += ", ";
      out += '[';
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        if (c) out += ", ";
        append_complex(out, m(r, c));
      }
      out += ']';
    }
    out += ']';
  }
  out += "]}\n";
  return out;
}

std::string state_to_json(Eigen::Index d, const ComplexVector& amplitudes) {
  std::string out = "{\"d\": " + std::to_string(d) + ", \"amplitudes\": [";
  for (Eigen::Index i = 0; i < amplitudes.size(); ++i) {
    if (i) out += ", ";
    append_complex(out, amplitudes[i]);
  }
  out += "]}\n";
  return out;
}

void write_basis_file(const std::filesystem::path& path, const OperatorBasis& basis) {
  dump(path, basis_to_json(basis));
}

void write_state_file(
    const std::filesystem::path& path, Eigen::Index d, const ComplexVector& amplitudes) {
  dump(path, state_to_json(d, amplitudes));
}

}  // namespace qtele::io
