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
#include <string_view>
#include <vector>

#include "qtele/bases.hpp"
#include "qtele/report.hpp"
#include "qtele/teleport.hpp"

namespace qtele {

enum class Command { Verify, Teleport, Fidelity, Average };
enum class SharedKind { MaximallyEntangled, Product, HaarRandom, Custom };

std::string_view to_string(Command c);
std::string_view to_string(SharedKind k);
std::optional<Command> parse_command(std::string_view s);
std::optional<BasisKind> parse_basis_kind(std::string_view s);
std::optional<SharedKind> parse_shared_kind(std::string_view s);

struct ExperimentConfig {
  Command command = Command::Verify;
  // Empty means "take d from the custom input file".
  std::vector<std::int64_t> dims;
  BasisKind basis_kind = BasisKind::Bell;
  SharedKind shared_kind = SharedKind::MaximallyEntangled;
  std::optional<std::int64_t> samples;
  std::uint64_t seed = 1;
  std::optional<double> tolerance;
  std::string basis_path;
  std::string shared_path;
  std::string out_path;
  ReportFormat format = ReportFormat::Csv;
  bool timestamp = true;
  int workers = 1;
};

/// Exit codes: 0 pass, 1 quantitative failure, 2 usage/config error.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

struct RunResult {
  int exit_code = kExitPass;
  std::vector<ReportRow> rows;
};

/// Throws ConfigError when the configuration is inconsistent.
void validate_config(const ExperimentConfig& cfg);

/// Samples used when --samples is not given.
std::int64_t default_samples(Command c, std::int64_t d);

/// Builds the setup an experiment runs on; custom inputs are read from disk
/// and normalized with a note on `log`. Throws StructureError for a custom
/// basis failing validation.
TeleportSetup make_setup(const ExperimentConfig& cfg, std::int64_t d, std::ostream& log);

/// Max identity residual over random psi; fails above the tolerance.
RunResult run_verify(const ExperimentConfig& cfg, std::ostream& log);
/// Per-shot transcript of sampled outcomes.
RunResult run_teleport(const ExperimentConfig& cfg, std::ostream& log);
/// Analytic average fidelity versus Monte Carlo; `average` also reports the
/// classical baseline.
RunResult run_average(const ExperimentConfig& cfg, std::ostream& log);

/// Dispatches on cfg.command, writes the report to `out`, and maps library
/// errors to exit codes (messages go to `log`).
int run_experiment(const ExperimentConfig& cfg, std::ostream& out, std::ostream& log);

}  // namespace qtele
