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
#include <functional>
#include <optional>
#include <string_view>

#include "qtele/qlinalg.hpp"
#include "qtele/random.hpp"
#include "qtele/teleport.hpp"

namespace qtele {

/// Haar-distributed pure state: normalized i.i.d. complex Gaussians.
StateVector haar_state(Eigen::Index d, Rng& rng);

/// Haar-distributed unitary from the QR decomposition of a complex Ginibre
/// matrix, with the phases of R's diagonal folded into Q.
ComplexMatrix haar_unitary(Eigen::Index d, Rng& rng);

/// (G + G^dagger)/2 for a complex Ginibre matrix G.
ComplexMatrix random_hermitian(Eigen::Index d, Rng& rng);

/// Haar-random bipartite pure state on C^d (x) C^d.
BipartiteState haar_bipartite_state(Eigen::Index d, Rng& rng);

/// Mean and standard error of a Monte-Carlo estimate.
struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;  // sample stddev / sqrt(samples)
  std::int64_t samples = 0;

  /// |mean - target| <= sigmas * stderr (+ tol::kStatisticalFloor)
  bool agrees_with(double target, double sigmas = tol::kSigmaBand) const;
};

/// Running mean/variance (Welford) with the pairwise merge rule, so partial
/// results from workers can be reduced in a fixed order.
class RunningStats {
 public:
  void push(double x);
  void merge(const RunningStats& other);
  std::int64_t count() const { return n_; }
  double mean() const { return mean_; }
  double sample_variance() const;
  McEstimate estimate() const;

 private:
  std::int64_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

/// Averages f(psi) over `samples` Haar states. Work is split into `workers`
/// contiguous chunks; chunk i draws from rng.split(i) and the partial
/// statistics are merged in chunk order, so the result depends only on
/// (rng seed, samples, workers).
McEstimate haar_average(
    Eigen::Index d, std::int64_t samples, const Rng& rng, int workers,
    const std::function<double(const StateVector&)>& f);

/// E(<psi|C|psi><psi|D|psi>) = (Tr CD + Tr C Tr D) / (d(d+1)).
Complex pair_average_analytic(const ComplexMatrix& c, const ComplexMatrix& d);

/// Monte-Carlo estimate of Re E(<psi|C|psi><psi|D|psi>).
McEstimate pair_average_monte_carlo(
    const ComplexMatrix& c, const ComplexMatrix& d, std::int64_t samples,
    const Rng& rng, int workers = 1);

enum class SpecialCase {
  IdealBell,  // Bell basis, maximally entangled shared state
  BellBasisGeneralC,  // Bell basis, any shared state
  ProductShared,  // product shared state, any basis
  ProductBasis,  // product basis, any shared state
  General,
};

std::string_view to_string(SpecialCase c);

struct AverageFidelityResult {
  double analytic = 0.0;
  std::optional<SpecialCase> special_case_label;
  std::optional<double> monte_carlo_mean;
  std::optional<double> monte_carlo_stderr;
  std::int64_t samples = 0;

  /// True when no Monte-Carlo estimate is attached, or it agrees with the
  /// analytic value within the sigma band.
  bool consistent(double sigmas = tol::kSigmaBand) const;
};

/// Which closed-form structure the setup matches. Structures are tried in the
/// order IdealBell, ProductShared, ProductBasis, BellBasisGeneralC; overlapping
/// structures share the same value.
SpecialCase detect_special_case(const TeleportSetup& setup);

/// E(F) = (d + sum_xi (Tr|T_xi|)^2) / (d(d+1)) for a normalized shared state.
AverageFidelityResult average_fidelity_analytic(const TeleportSetup& setup);

/// The general form (sum_xi Tr|T_xi|^2 + (Tr|T_xi|)^2) / (d(d+1)) before the
/// completeness relation collapses the first sum to d.
double average_fidelity_general(const TeleportSetup& setup);

struct SpecialCaseValue {
  SpecialCase label;
  double value;
};

/// Closed form for the detected structure: 1 for IdealBell, 2/(d+1) for
/// ProductShared and ProductBasis, (1 + (Tr|C|)^2)/(d+1) for
/// BellBasisGeneralC, and the general analytic value otherwise.
SpecialCaseValue special_case_fidelity(const TeleportSetup& setup);

/// Estimates E(F) from `samples` Haar inputs; throws ConfigError for fewer
/// than 100 samples. The analytic value is filled in for comparison.
AverageFidelityResult monte_carlo_fidelity(
    const TeleportSetup& setup, std::int64_t samples, const Rng& rng,
    int workers = 1);

/// Measure-and-prepare baseline: Monte-Carlo average of sum_j |psi_j|^4,
/// whose Haar average is 2/(d+1).
McEstimate classical_baseline(
    Eigen::Index d, std::int64_t samples, const Rng& rng, int workers = 1);

/// sum_j |psi_j|^4 for a single state.
double classical_fidelity(const StateVector& psi);

}  // namespace qtele
