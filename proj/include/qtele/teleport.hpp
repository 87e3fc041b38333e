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

#include <cstddef>
#include <optional>
#include <vector>

#include "qtele/bases.hpp"
#include "qtele/choi.hpp"
#include "qtele/qlinalg.hpp"
#include "qtele/random.hpp"

namespace qtele {

/// A shared resource |C> on A'B together with Alice's measurement basis on
/// AA'. Owns the transfer operators T_xi = C^t C_xi^dagger, which satisfy
///
///   |psi>_A (x) |C>_{A'B} = sum_xi |C_xi>_{AA'} (x) T_xi |psi>_B.
///
/// The polar factors of every T_xi are cached alongside, since both the
/// optimal correction and |T_xi| are needed per outcome.
class TeleportSetup {
 public:
  Eigen::Index local_dim() const { return shared_.local_dim(); }
  const BipartiteState& shared() const { return shared_; }
  const OperatorBasis& basis() const { return basis_; }
  std::size_t outcome_count() const { return transfer_.size(); }

  const std::vector<ComplexMatrix>& transfer_ops() const { return transfer_; }
  /// |T_xi|
  const std::vector<ComplexMatrix>& abs_transfer_ops() const { return abs_; }
  /// U_xi^dagger where T_xi = U_xi |T_xi|
  const std::vector<ComplexMatrix>& corrections() const { return corrections_; }

 private:
  friend TeleportSetup build_setup(BipartiteState, OperatorBasis, bool);
  TeleportSetup(BipartiteState shared, OperatorBasis basis);

  BipartiteState shared_;
  OperatorBasis basis_;
  std::vector<ComplexMatrix> transfer_;
  std::vector<ComplexMatrix> abs_;
  std::vector<ComplexMatrix> corrections_;
};

/// Throws DimensionError if the local dimensions differ, NormalizationError for
/// an unnormalized shared state, and StructureError if the basis fails
/// validate_basis (skipped when `validate` is false, e.g. to study broken
/// bases).
TeleportSetup build_setup(
    BipartiteState shared, OperatorBasis basis, bool validate = true);

/// Euclidean norm of (psi (x) |C>) - sum_xi |C_xi> (x) T_xi psi, both sides
/// built explicitly as d^3 vectors with index a*d^2 + b*d + c over A, A', B.
double verify_identity(const StateVector& psi, const TeleportSetup& setup);

/// p(xi | psi) = |T_xi psi|^2 in the xi = j*d + k order.
std::vector<double> outcome_probabilities(
    const StateVector& psi, const TeleportSetup& setup);

struct TeleportOutcome {
  std::size_t xi = 0;
  double probability = 0.0;
  // Both empty when T_xi psi = 0; such outcomes are never sampled.
  std::optional<StateVector> raw_conditional_state;  // T psi / |T psi|
  std::optional<StateVector> corrected_state;  // U^dag T psi / |T psi|
  ComplexMatrix correction;
  double conditional_fidelity = 0.0;  // |<psi|corrected>|^2
};

/// Populates every field for a fixed outcome xi.
TeleportOutcome evaluate_outcome(
    const StateVector& psi, const TeleportSetup& setup, std::size_t xi);

/// Draws xi from p(xi | psi) by inverse CDF over the fixed xi order.
TeleportOutcome sample_outcome(
    const StateVector& psi, const TeleportSetup& setup, Rng& rng);

/// Bob's optimal unitary for transfer operator t: the inverse of the unitary
/// polar factor, so that correction * t = |t|.
ComplexMatrix optimal_correction(const ComplexMatrix& t);

/// F(psi) = sum_xi <psi| |T_xi| |psi>^2, the probability-weighted fidelity
/// after optimal correction.
double state_fidelity(const StateVector& psi, const TeleportSetup& setup);

}  // namespace qtele
