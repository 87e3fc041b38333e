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

#include "qtele/haar.hpp"

#include <cmath>
#include <thread>
#include <vector>

#include "qtele/errors.hpp"

namespace qtele {

namespace {

constexpr std::int64_t kMinFidelitySamples = 100;

double sum_sq_trace_abs(const TeleportSetup& setup) {
  double s = 0.0;
  for (const auto& a : setup.abs_transfer_ops()) {
    const double tr = a.trace().real();
    s += tr * tr;
  }
  return s;
}

}  // namespace

StateVector haar_state(Eigen::Index d, Rng& rng) {
  if (d <= 0) throw DimensionError("haar_state: d must be positive");
  for (;;) {
    ComplexVector v = rng.complex_gaussian_vector(d);
    if (v.norm() > 0.0) return StateVector::normalize(std::move(v));
  }
}

ComplexMatrix haar_unitary(Eigen::Index d, Rng& rng) {
  if (d <= 0) throw DimensionError("haar_unitary: d must be positive");
  const ComplexMatrix g = rng.complex_gaussian_matrix(d, d);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < d; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

ComplexMatrix random_hermitian(Eigen::Index d, Rng& rng) {
  if (d <= 0) throw DimensionError("random_hermitian: d must be positive");
  const ComplexMatrix g = rng.complex_gaussian_matrix(d, d);
  return 0.5 * (g + g.adjoint());
}

BipartiteState haar_bipartite_state(Eigen::Index d, Rng& rng) {
  if (d <= 0) throw DimensionError("haar_bipartite_state: d must be positive");
  return BipartiteState::from_vector(haar_state(d * d, rng).amplitudes(), d);
}

bool McEstimate::agrees_with(double target, double sigmas) const {
  return std::abs(mean - target) <= sigmas * std_error + tol::kStatisticalFloor;
}

void RunningStats::push(double x) {
  ++n_;
  const double delta = x - mean_;
  mean_ += delta / static_cast<double>(n_);
  m2_ += delta * (x - mean_);
}

void RunningStats::merge(const RunningStats& other) {
  if (other.n_ == 0) return;
  if (n_ == 0) {
    *this = other;
    return;
  }
  const auto na = static_cast<double>(n_);
  const auto nb = static_cast<double>(other.n_);
  const double n = na + nb;
  const double delta = other.mean_ - mean_;
  mean_ += delta * nb / n;
  m2_ += other.m2_ + delta * delta * na * nb / n;
  n_ += other.n_;
}

double RunningStats::sample_variance() const {
  return n_ > 1 ? m2_ / static_cast<double>(n_ - 1) : 0.0;
}

McEstimate RunningStats::estimate() const {
  McEstimate e;
  e.mean = mean_;
  e.samples = n_;
  e.std_error = n_ > 0 ? std::sqrt(sample_variance() / static_cast<double>(n_)) : 0.0;
  return e;
}

McEstimate haar_average(
    Eigen::Index d, std::int64_t samples, const Rng& rng, int workers,
    const std::function<double(const StateVector&)>& f) {
  if (samples <= 0) throw ConfigError("haar_average: samples must be positive");
  if (workers <= 0) throw ConfigError("haar_average: workers must be positive");
  if (d <= 0) throw DimensionError("haar_average: d must be positive");

  std::vector<RunningStats> partial(static_cast<std::size_t>(workers));
  auto run_chunk = [&](int w) {
    const std::int64_t begin = samples * w / workers;
    const std::int64_t end = samples * (w + 1) / workers;
    Rng local = rng.split(static_cast<std::uint64_t>(w));
    RunningStats& stats = partial[static_cast<std::size_t>(w)];
    for (std::int64_t i = begin; i < end; ++i) stats.push(f(haar_state(d, local)));
  };

  if (workers == 1) {
    run_chunk(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(run_chunk, w);
  }

  RunningStats total;
  for (const auto& p : partial) total.merge(p);
  return total.estimate();
}

Complex pair_average_analytic(const ComplexMatrix& c, const ComplexMatrix& d) {
  require_square(c, "pair_average_analytic");
  if (c.rows() != d.rows() || c.cols() != d.cols()) {
    throw DimensionError("pair_average_analytic: operand shapes differ");
  }
  const auto n = static_cast<double>(c.rows());
  return ((c * d).trace() + c.trace() * d.trace()) / (n * (n + 1.0));
}

McEstimate pair_average_monte_carlo(
    const ComplexMatrix& c, const ComplexMatrix& d, std::int64_t samples,
    const Rng& rng, int workers) {
  require_square(c, "pair_average_monte_carlo");
  if (c.rows() != d.rows() || c.cols() != d.cols()) {
    throw DimensionError("pair_average_monte_carlo: operand shapes differ");
  }
  return haar_average(c.rows(), samples, rng, workers, [&](const StateVector& psi) {
    return (expectation(psi.amplitudes(), c) * expectation(psi.amplitudes(), d)).real();
  });
}

std::string_view to_string(SpecialCase c) {
  switch (c) {
    case SpecialCase::IdealBell: return "IdealBell";
    case SpecialCase::BellBasisGeneralC: return "BellBasisGeneralC";
    case SpecialCase::ProductShared: return "ProductShared";
    case SpecialCase::ProductBasis: return "ProductBasis";
    case SpecialCase::General: return "General";
  }
  return "General";
}

bool AverageFidelityResult::consistent(double sigmas) const {
  if (!monte_carlo_mean || !monte_carlo_stderr) return true;
  return std::abs(analytic - *monte_carlo_mean) <=
         sigmas * *monte_carlo_stderr + tol::kStatisticalFloor;
}

SpecialCase detect_special_case(const TeleportSetup& setup) {
  const EntanglementClass shared = analyze_entanglement(setup.shared()).classification;
  const BasisKind kind = setup.basis().kind();
  if (kind == BasisKind::Bell && shared == EntanglementClass::MaximallyEntangled) {
    return SpecialCase::IdealBell;
  }
  if (shared == EntanglementClass::ProductState) return SpecialCase::ProductShared;
  if (kind == BasisKind::Product) return SpecialCase::ProductBasis;
  if (kind == BasisKind::Bell) return SpecialCase::BellBasisGeneralC;
  return SpecialCase::General;
}

AverageFidelityResult average_fidelity_analytic(const TeleportSetup& setup) {
  const auto d = static_cast<double>(setup.local_dim());
  AverageFidelityResult out;
  out.analytic = (d + sum_sq_trace_abs(setup)) / (d * (d + 1.0));
  out.special_case_label = detect_special_case(setup);
  return out;
}

double average_fidelity_general(const TeleportSetup& setup) {
  const auto d = static_cast<double>(setup.local_dim());
  double s = 0.0;
  for (const auto& a : setup.abs_transfer_ops()) {
    const double tr = a.trace().real();
    s += (a * a).trace().real() + tr * tr;
  }
  return s / (d * (d + 1.0));
}

SpecialCaseValue special_case_fidelity(const TeleportSetup& setup) {
  const SpecialCase label = detect_special_case(setup);
  const auto d = static_cast<double>(setup.local_dim());
  switch (label) {
    case SpecialCase::IdealBell:
      return {label, 1.0};
    case SpecialCase::ProductShared:
    case SpecialCase::ProductBasis:
      return {label, 2.0 / (d + 1.0)};
    case SpecialCase::BellBasisGeneralC: {
      const double tr_abs_c =
          svd(setup.shared().operator_form()).singular_values.sum();
      return {label, (1.0 + tr_abs_c * tr_abs_c) / (d + 1.0)};
    }
    case SpecialCase::General:
      break;
  }
  return {label, average_fidelity_analytic(setup).analytic};
}

AverageFidelityResult monte_carlo_fidelity(
    const TeleportSetup& setup, std::int64_t samples, const Rng& rng, int workers) {
  if (samples < kMinFidelitySamples) {
    throw ConfigError(
        "monte_carlo_fidelity: need at least " +
        std::to_string(kMinFidelitySamples) + " samples, got " +
        std::to_string(samples));
  }
  AverageFidelityResult out = average_fidelity_analytic(setup);
  const McEstimate mc = haar_average(
      setup.local_dim(), samples, rng, workers,
      [&](const StateVector& psi) { return state_fidelity(psi, setup); });
  out.monte_carlo_mean = mc.mean;
  out.monte_carlo_stderr = mc.std_error;
  out.samples = mc.samples;
  return out;
}

double classical_fidelity(const StateVector& psi) {
  return psi.amplitudes().cwiseAbs2().cwiseAbs2().sum();
}

McEstimate classical_baseline(
    Eigen::Index d, std::int64_t samples, const Rng& rng, int workers) {
  if (d < 2) throw DimensionError("classical_baseline: d must be at least 2");
  return haar_average(d, samples, rng, workers, classical_fidelity);
}

}  // namespace qtele
