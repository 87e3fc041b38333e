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

#include "qtele/report.hpp"

#include <json.hpp>

#include "qtele/io.hpp"

namespace qtele {

namespace {

struct Field {
  const char* name;
  std::optional<std::string> text;  // already formatted
  bool quoted;
};

std::optional<std::string> fmt(const std::optional<double>& x) {
  if (!x) return std::nullopt;
  return io::format_double(*x);
}

std::optional<std::string> fmt(const std::optional<std::int64_t>& x) {
  if (!x) return std::nullopt;
  return std::to_string(*x);
}

std::vector<Field> fields(const ReportRow& r) {
  return {
      {"experiment", r.experiment, true},
      {"d", std::to_string(r.d), false},
      {"basis_kind", r.basis_kind, true},
      {"shared_kind", r.shared_kind, true},
      {"quantity", r.quantity, true},
      {"label", r.label, true},
      {"value", fmt(r.value), false},
      {"analytic", fmt(r.analytic), false},
      {"mc_mean", fmt(r.mc_mean), false},
      {"mc_stderr", fmt(r.mc_stderr), false},
      {"samples", fmt(r.samples), false},
      {"seed", std::to_string(r.seed), false},
      {"residual", fmt(r.residual), false},
      {"shot", fmt(r.shot), false},
      {"xi", fmt(r.xi), false},
      {"probability", fmt(r.probability), false},
  };
}

std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

}  // namespace

std::string csv_header() {
  std::string out;
  for (const auto& f : fields(ReportRow{})) {
    if (!out.empty()) out += ',';
    out += f.name;
  }
  return out;
}

void write_report(std::ostream& out, ReportFormat format,
                  const std::vector<ReportRow>& rows,
                  const std::optional<std::string>& timestamp) {
  if (format == ReportFormat::Csv) {
    if (timestamp) out << "# generated " << *timestamp << '\n';
    out << csv_header() << '\n';
    for (const auto& row : rows) {
      bool first = true;
      for (const auto& f : fields(row)) {
        if (!first) out << ',';
        first = false;
        if (f.text) out << *f.text;
      }
      out << '\n';
    }
    return;
  }

  out << "{\n";
  if (timestamp) out << "  \"generated\": " << json_string(*timestamp) << ",\n";
  out << "  \"rows\": [";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out << (i ? ",\n    {" : "\n    {");
    bool first = true;
    for (const auto& f : fields(rows[i])) {
      if (!first) out << ", ";
      first = false;
      out << '"' << f.name << "\": ";
      if (!f.text) {
        out << "null";
      } else if (f.quoted) {
        out << json_string(*f.text);
      } else {
        out << *f.text;
      }
    }
    out << '}';
  }
  out << (rows.empty() ? "]\n}\n" : "\n  ]\n}\n");
}

}  // namespace qtele
