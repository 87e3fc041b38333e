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

#include "qtele/experiments.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <numeric>

#include "qtele/errors.hpp"
#include "qtele/haar.hpp"
#include "qtele/io.hpp"

namespace qtele {

namespace {

// Sub-stream tags; every random draw in an experiment comes from
// Rng(seed).split(tag).split(d).
enum StreamTag : std::uint64_t { kSharedStream = 1, kPsiStream, kShotStream, kMcStream, kBaselineStream };

constexpr std::int64_t kDefaultVerifySamples = 50;
constexpr std::int64_t kDefaultShots = 1000;
constexpr std::int64_t kMinAverageSamples = 100;

Rng stream_for(const ExperimentConfig& cfg, StreamTag tag, std::int64_t d) {
  return Rng(cfg.seed).split(tag).split(static_cast<std::uint64_t>(d));
}

std::string utc_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::vector<std::int64_t> resolve_dims(const ExperimentConfig& cfg) {
  if (!cfg.dims.empty()) return cfg.dims;
  if (cfg.basis_kind == BasisKind::Custom) {
    return {io::read_basis_file(cfg.basis_path).local_dim()};
  }
  if (cfg.shared_kind == SharedKind::Custom) {
    return {io::read_state_file(cfg.shared_path).d};
  }
  return {2};
}

ReportRow base_row(const ExperimentConfig& cfg, std::int64_t d, std::string quantity) {
  ReportRow row;
  row.experiment = std::string(to_string(cfg.command)) + "-d" + std::to_string(d);
  row.d = d;
  row.basis_kind = std::string(to_string(cfg.basis_kind));
  row.shared_kind = std::string(to_string(cfg.shared_kind));
  row.quantity = std::move(quantity);
  row.seed = cfg.seed;
  return row;
}

std::int64_t samples_for(const ExperimentConfig& cfg, std::int64_t d) {
  return cfg.samples ? *cfg.samples : default_samples(cfg.command, d);
}

double probability_sum_error(const std::vector<double>& p) {
  return std::abs(std::accumulate(p.begin(), p.end(), 0.0) - 1.0);
}

}  // namespace

std::string_view to_string(Command c) {
  switch (c) {
    case Command::Verify: return "verify";
    case Command::Teleport: return "teleport";
    case Command::Fidelity: return "fidelity";
    case Command::Average: return "average";
  }
  return "verify";
}

std::string_view to_string(SharedKind k) {
  switch (k) {
    case SharedKind::MaximallyEntangled: return "maximally-entangled";
    case SharedKind::Product: return "product";
    case SharedKind::HaarRandom: return "haar-random";
    case SharedKind::Custom: return "custom";
  }
  return "custom";
}

std::optional<Command> parse_command(std::string_view s) {
  for (auto c : {Command::Verify, Command::Teleport, Command::Fidelity, Command::Average}) {
    if (s == to_string(c)) return c;
  }
  return std::nullopt;
}

std::optional<BasisKind> parse_basis_kind(std::string_view s) {
  for (auto k : {BasisKind::Bell, BasisKind::Product, BasisKind::Custom}) {
    if (s == to_string(k)) return k;
  }
  return std::nullopt;
}

std::optional<SharedKind> parse_shared_kind(std::string_view s) {
  for (auto k : {SharedKind::MaximallyEntangled, SharedKind::Product,
                 SharedKind::HaarRandom, SharedKind::Custom}) {
    if (s == to_string(k)) return k;
  }
  return std::nullopt;
}

std::int64_t default_samples(Command c, std::int64_t d) {
  switch (c) {
    case Command::Verify: return kDefaultVerifySamples;
    case Command::Teleport: return kDefaultShots;
    case Command::Fidelity:
    case Command::Average:
      if (d <= 4) return 100'000;
      if (d <= 8) return 20'000;
      return 10'000;
  }
  return kDefaultVerifySamples;
}

void validate_config(const ExperimentConfig& cfg) {
  if (cfg.basis_kind == BasisKind::Custom && cfg.basis_path.empty()) {
    throw ConfigError("--basis custom requires --basis-file");
  }
  if (cfg.shared_kind == SharedKind::Custom && cfg.shared_path.empty()) {
    throw ConfigError("--shared custom requires --shared-file");
  }
  for (auto d : cfg.dims) {
    if (d <= 0) throw ConfigError("--d values must be positive");
    if (cfg.command == Command::Average && d < 2) {
      throw ConfigError("average needs d >= 2 for the classical baseline");
    }
  }
  if (cfg.samples && *cfg.samples <= 0) throw ConfigError("--samples must be positive");
  if ((cfg.command == Command::Average || cfg.command == Command::Fidelity) &&
      cfg.samples && *cfg.samples < kMinAverageSamples) {
    throw ConfigError("--samples must be at least 100 for average and fidelity");
  }
  if (cfg.tolerance && !(*cfg.tolerance > 0.0)) {
    throw ConfigError("--tolerance must be positive");
  }
  if (cfg.workers <= 0) throw ConfigError("--workers must be positive");
}

TeleportSetup make_setup(const ExperimentConfig& cfg, std::int64_t d, std::ostream& log) {
  OperatorBasis basis = [&] {
    switch (cfg.basis_kind) {
      case BasisKind::Bell: return bell_basis(d);
      case BasisKind::Product: return product_basis(d);
      case BasisKind::Custom: break;
    }
    OperatorBasis custom = io::read_basis_file(cfg.basis_path);
    if (custom.local_dim() != d) {
      throw ConfigError(
          "basis file has d = " + std::to_string(custom.local_dim()) +
          ", requested d = " + std::to_string(d));
    }
    const BasisValidation v = validate_basis(
        custom, 8, cfg.tolerance.value_or(tol::kBasis));
    if (!v.passed) throw StructureError("custom basis rejected: " + v.summary());
    return custom;
  }();

  BipartiteState shared = [&] {
    switch (cfg.shared_kind) {
      case SharedKind::MaximallyEntangled: return BipartiteState::maximally_entangled(d);
      case SharedKind::Product: return BipartiteState::product(d, 0, 0);
      case SharedKind::HaarRandom: {
        Rng rng = stream_for(cfg, kSharedStream, d);
        return haar_bipartite_state(d, rng);
      }
      case SharedKind::Custom: break;
    }
    const io::StateFile f = io::read_state_file(cfg.shared_path);
    if (f.d != d || f.amplitudes.size() != d * d) {
      throw ConfigError(
          "shared-state file must hold d^2 amplitudes for d = " + std::to_string(d));
    }
    BipartiteState s = BipartiteState::from_vector(f.amplitudes, d);
    if (!s.is_normalized()) {
      log << "warning: shared state has Tr(C^dagger C) = "
          << io::format_double(s.norm_squared()) << "; normalizing\n";
      s = s.normalized();
    }
    return s;
  }();

  // Custom bases were validated above with the configured tolerance.
  return build_setup(std::move(shared), std::move(basis),
                     cfg.basis_kind != BasisKind::Custom);
}

RunResult run_verify(const ExperimentConfig& cfg, std::ostream& log) {
  validate_config(cfg);
  RunResult result;
  const double tolerance = cfg.tolerance.value_or(tol::kReconstruction);
  for (auto d : resolve_dims(cfg)) {
    const TeleportSetup setup = make_setup(cfg, d, log);
    const std::int64_t n = samples_for(cfg, d);
    Rng rng = stream_for(cfg, kPsiStream, d);
    double max_residual = 0.0;
    double max_prob_error = 0.0;
    for (std::int64_t i = 0; i < n; ++i) {
      const StateVector psi = haar_state(d, rng);
      max_residual = std::max(max_residual, verify_identity(psi, setup));
      max_prob_error = std::max(
          max_prob_error, probability_sum_error(outcome_probabilities(psi, setup)));
    }
    ReportRow row = base_row(cfg, d, "identity_residual");
    row.samples = n;
    row.residual = max_residual;
    result.rows.push_back(row);

    ReportRow prob = base_row(cfg, d, "probability_sum_error");
    prob.samples = n;
    prob.residual = max_prob_error;
    result.rows.push_back(prob);

    if (!(max_residual < tolerance) || !(max_prob_error < tolerance)) {
      result.exit_code = kExitFail;
    }
  }
  return result;
}

RunResult run_teleport(const ExperimentConfig& cfg, std::ostream& log) {
  validate_config(cfg);
  RunResult result;
  const double tolerance = cfg.tolerance.value_or(tol::kReconstruction);
  for (auto d : resolve_dims(cfg)) {
    const TeleportSetup setup = make_setup(cfg, d, log);
    const std::int64_t shots = samples_for(cfg, d);
    Rng psi_rng = stream_for(cfg, kPsiStream, d);
    Rng shot_rng = stream_for(cfg, kShotStream, d);
    RunningStats stats;
    for (std::int64_t shot = 0; shot < shots; ++shot) {
      const StateVector psi = haar_state(d, psi_rng);
      const TeleportOutcome outcome = sample_outcome(psi, setup, shot_rng);
      const double prob_error = probability_sum_error(outcome_probabilities(psi, setup));
      if (!(prob_error < tolerance)) result.exit_code = kExitFail;
      stats.push(outcome.conditional_fidelity);

      ReportRow row = base_row(cfg, d, "conditional_fidelity");
      row.shot = shot;
      row.xi = static_cast<std::int64_t>(outcome.xi);
      row.probability = outcome.probability;
      row.value = outcome.conditional_fidelity;
      row.residual = prob_error;
      row.seed = cfg.seed;
      result.rows.push_back(std::move(row));
    }
    // Averaging conditional fidelities over shots estimates E(F).
    const McEstimate e = stats.estimate();
    ReportRow summary = base_row(cfg, d, "mean_conditional_fidelity");
    const AverageFidelityResult analytic = average_fidelity_analytic(setup);
    summary.label = std::string(to_string(*analytic.special_case_label));
    summary.analytic = analytic.analytic;
    summary.mc_mean = e.mean;
    summary.mc_stderr = e.std_error;
    summary.samples = e.samples;
    result.rows.push_back(std::move(summary));
  }
  return result;
}

RunResult run_average(const ExperimentConfig& cfg, std::ostream& log) {
  validate_config(cfg);
  RunResult result;
  for (auto d : resolve_dims(cfg)) {
    const TeleportSetup setup = make_setup(cfg, d, log);
    const std::int64_t n = samples_for(cfg, d);
    const AverageFidelityResult r =
        monte_carlo_fidelity(setup, n, stream_for(cfg, kMcStream, d), cfg.workers);
    ReportRow row = base_row(cfg, d, "average_fidelity");
    row.label = std::string(to_string(*r.special_case_label));
    row.analytic = r.analytic;
    row.mc_mean = r.monte_carlo_mean;
    row.mc_stderr = r.monte_carlo_stderr;
    row.samples = r.samples;
    result.rows.push_back(std::move(row));
    if (!r.consistent()) result.exit_code = kExitFail;

    if (cfg.command == Command::Average) {
      const McEstimate base = classical_baseline(
          d, n, stream_for(cfg, kBaselineStream, d), cfg.workers);
      const double target = 2.0 / (static_cast<double>(d) + 1.0);
      ReportRow b = base_row(cfg, d, "classical_baseline");
      b.analytic = target;
      b.mc_mean = base.mean;
      b.mc_stderr = base.std_error;
      b.samples = base.samples;
      result.rows.push_back(std::move(b));
      if (!base.agrees_with(target)) result.exit_code = kExitFail;
    }
  }
  return result;
}

int run_experiment(const ExperimentConfig& cfg, std::ostream& out, std::ostream& log) {
  RunResult result;
  try {
    switch (cfg.command) {
      case Command::Verify: result = run_verify(cfg, log); break;
      case Command::Teleport: result = run_teleport(cfg, log); break;
      case Command::Fidelity:
      case Command::Average: result = run_average(cfg, log); break;
    }
  } catch (const InternalError& e) {
    log << "internal error: " << e.what() << '\n';
    return kExitFail;
  } catch (const Error& e) {
    log << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  const std::optional<std::string> stamp =
      cfg.timestamp ? std::optional<std::string>(utc_timestamp()) : std::nullopt;
  if (cfg.out_path.empty()) {
    write_report(out, cfg.format, result.rows, stamp);
  } else {
    std::ofstream file(cfg.out_path);
    if (!file) {
      log << "error: cannot write " << cfg.out_path << '\n';
      return kExitUsage;
    }
    write_report(file, cfg.format, result.rows, stamp);
  }
  if (result.exit_code != kExitPass) {
    log << "quantitative check failed; see report\n";
  }
  return result.exit_code;
}

}  // namespace qtele
