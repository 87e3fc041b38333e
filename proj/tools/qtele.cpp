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

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qtele/experiments.hpp"

int main(int argc, char** argv) {
  using namespace qtele;

  CLI::App app{"Qudit teleportation laboratory"};
  app.require_subcommand(1);

  ExperimentConfig cfg;
  std::string basis = "bell";
  std::string shared = "maximally-entangled";
  std::string format = "csv";
  std::int64_t samples = 0;
  double tolerance = 0.0;
  bool no_timestamp = false;

  const std::map<std::string, BasisKind> basis_map{
      {"bell", BasisKind::Bell}, {"product", BasisKind::Product},
      {"custom", BasisKind::Custom}};
  const std::map<std::string, SharedKind> shared_map{
      {"maximally-entangled", SharedKind::MaximallyEntangled},
      {"product", SharedKind::Product},
      {"haar-random", SharedKind::HaarRandom},
      {"custom", SharedKind::Custom}};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--d", cfg.dims, "Local dimension(s); several values run a sweep");
    sub->add_option("--basis", basis, "Measurement basis")
        ->check(CLI::IsMember({"bell", "product", "custom"}));
    sub->add_option("--basis-file", cfg.basis_path, "JSON basis file for --basis custom");
    sub->add_option("--shared", shared, "Shared resource state")
        ->check(CLI::IsMember({"maximally-entangled", "product", "haar-random", "custom"}));
    sub->add_option("--shared-file", cfg.shared_path,
                    "JSON state file (d^2 amplitudes) for --shared custom");
    sub->add_option("--samples", samples,
                    "Random inputs (verify), shots (teleport) or Haar samples")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "Random seed");
    sub->add_option("--out", cfg.out_path, "Write the report here instead of stdout");
    sub->add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--tolerance", tolerance, "Residual tolerance override")
        ->check(CLI::PositiveNumber);
    sub->add_option("--workers", cfg.workers, "Monte-Carlo worker threads")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--no-timestamp", no_timestamp, "Omit the generation timestamp");
  };

  const std::vector<std::pair<Command, std::string>> commands{
      {Command::Verify, "Check the teleportation identity on random inputs"},
      {Command::Teleport, "Sample measurement outcomes and Bob's corrected states"},
      {Command::Fidelity, "Analytic average fidelity versus Monte Carlo"},
      {Command::Average, "Average fidelity plus the classical measure-and-prepare baseline"},
  };
  std::vector<CLI::App*> subs;
  for (const auto& [command, help] : commands) {
    CLI::App* sub = app.add_subcommand(std::string(to_string(command)), help);
    add_common(sub);
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (subs[i]->parsed()) cfg.command = commands[i].first;
  }
  CLI::App* sub = subs[static_cast<std::size_t>(cfg.command)];
  cfg.basis_kind = basis_map.at(basis);
  cfg.shared_kind = shared_map.at(shared);
  cfg.format = format == "json" ? ReportFormat::Json : ReportFormat::Csv;
  if (sub->count("--samples")) cfg.samples = samples;
  if (sub->count("--tolerance")) cfg.tolerance = tolerance;
  cfg.timestamp = !no_timestamp;

  return run_experiment(cfg, std::cout, std::cerr);
}
