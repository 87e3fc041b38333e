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

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace qtele {

/// One line of experiment output. Unset optionals serialize as an empty CSV
/// cell or JSON null.
struct ReportRow {
  std::string experiment;
  std::int64_t d = 0;
  std::string basis_kind;
  std::string shared_kind;
  std::string quantity;
  std::optional<std::string> label;
  std::optional<double> value;  // a single measured quantity (per-shot rows)
  std::optional<double> analytic;
  std::optional<double> mc_mean;
  std::optional<double> mc_stderr;
  std::optional<std::int64_t> samples;
  std::uint64_t seed = 0;
  std::optional<double> residual;
  std::optional<std::int64_t> shot;
  std::optional<std::int64_t> xi;
  std::optional<double> probability;
};

enum class ReportFormat { Csv, Json };

/// `timestamp`, when set, is written as a leading "# generated ..." CSV
/// comment or a "generated" JSON field.
void write_report(std::ostream& out, ReportFormat format,
                  const std::vector<ReportRow>& rows,
                  const std::optional<std::string>& timestamp);

std::string csv_header();

}  // namespace qtele
