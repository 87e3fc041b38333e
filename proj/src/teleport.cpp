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

#include "qtele/teleport.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "qtele/errors.hpp"

namespace qtele {

namespace {

// Below this norm T_xi psi is treated as zero.
constexpr double kZeroBranch = 1e-12;

void require_dim(const StateVector& psi, const TeleportSetup& setup,
                 const char* what) {
  if (psi.dim() != setup.local_dim()) {
    throw DimensionError(
        std::string(what) + ": state has dimension " + std::to_string(psi.dim()) +
        ", setup has d = " + std::to_string(setup.local_dim()));
  }
}

}  // namespace

TeleportSetup::TeleportSetup(BipartiteState shared, OperatorBasis basis)
    : shared_(std::move(shared)), basis_(std::move(basis)) {
  const ComplexMatrix ct = shared_.operator_form().transpose();
  transfer_.reserve(basis_.size());
  abs_.reserve(basis_.size());
  corrections_.reserve(basis_.size());
  for (const auto& c : basis_.elements()) {
    ComplexMatrix t = ct * c.adjoint();
    PolarFactors polar = polar_decompose(t);
    corrections_.push_back(polar.unitary.adjoint());
    abs_.push_back(std::move(polar.positive));
    transfer_.push_back(std::move(t));
  }
}

TeleportSetup build_setup(BipartiteState shared, OperatorBasis basis, bool validate) {
  if (shared.local_dim() != basis.local_dim()) {
    throw DimensionError(
        "build_setup: shared state has d = " + std::to_string(shared.local_dim()) +
        ", basis has d = " + std::to_string(basis.local_dim()));
  }
  if (!shared.is_normalized()) {
    throw NormalizationError("build_setup: shared state is not normalized");
  }
  if (validate) {
    const BasisValidation v = validate_basis(basis);
    if (!v.passed) throw StructureError("build_setup: " + v.summary());
  }
  return TeleportSetup(std::move(shared), std::move(basis));
}

double verify_identity(const StateVector& psi, const TeleportSetup& setup) {
  require_dim(psi, setup, "verify_identity");
  const ComplexVector lhs = tensor_product(psi.amplitudes(), setup.shared().vector());
  ComplexVector rhs = ComplexVector::Zero(lhs.size());
  const auto& basis = setup.basis();
  for (std::size_t xi = 0; xi < basis.size(); ++xi) {
    rhs += tensor_product(
        op_to_vec(basis[xi]), ComplexVector(setup.transfer_ops()[xi] * psi.amplitudes()));
  }
  return (lhs - rhs).norm();
}

std::vector<double> outcome_probabilities(
    const StateVector& psi, const TeleportSetup& setup) {
  require_dim(psi, setup, "outcome_probabilities");
  std::vector<double> p;
  p.reserve(setup.outcome_count());
  for (const auto& t : setup.transfer_ops()) {
    p.push_back((t * psi.amplitudes()).squaredNorm());
  }
  return p;
}

TeleportOutcome evaluate_outcome(
    const StateVector& psi, const TeleportSetup& setup, std::size_t xi) {
  require_dim(psi, setup, "evaluate_outcome");
  if (xi >= setup.outcome_count()) {
    throw DimensionError("evaluate_outcome: outcome index out of range");
  }
  TeleportOutcome out;
  out.xi = xi;
  out.correction = setup.corrections()[xi];
  const ComplexVector raw = setup.transfer_ops()[xi] * psi.amplitudes();
  out.probability = raw.squaredNorm();
  if (std::sqrt(out.probability) <= kZeroBranch) return out;

  out.raw_conditional_state = StateVector::normalize(raw);
  out.corrected_state = StateVector::normalize(out.correction * raw);
  out.conditional_fidelity = fidelity(psi, *out.corrected_state);
  return out;
}

TeleportOutcome sample_outcome(
    const StateVector& psi, const TeleportSetup& setup, Rng& rng) {
  const std::vector<double> p = outcome_probabilities(psi, setup);
  const double total = std::accumulate(p.begin(), p.end(), 0.0);
  if (!(total > 0.0)) {
    throw InternalError("sample_outcome: all outcome probabilities vanish");
  }
  const double target = rng.uniform() * total;
  double cumulative = 0.0;
  std::size_t chosen = p.size();
  std::size_t last_nonzero = p.size();
  for (std::size_t xi = 0; xi < p.size(); ++xi) {
    if (std::sqrt(p[xi]) <= kZeroBranch) continue;
    last_nonzero = xi;
    cumulative += p[xi];
    if (target < cumulative) {
      chosen = xi;
      break;
    }
  }
  // Rounding can leave target just past the final partial sum.
  if (chosen == p.size()) chosen = last_nonzero;
  if (chosen == p.size()) {
    throw InternalError("sample_outcome: no outcome with nonzero probability");
  }
  return evaluate_outcome(psi, setup, chosen);
}

ComplexMatrix optimal_correction(const ComplexMatrix& t) {
  return polar_decompose(t).unitary.adjoint();
}

double state_fidelity(const StateVector& psi, const TeleportSetup& setup) {
  require_dim(psi, setup, "state_fidelity");
  double f = 0.0;
  for (const auto& abs_t : setup.abs_transfer_ops()) {
    // |T| is Hermitian, so the expectation is real.
    const double overlap = expectation(psi.amplitudes(), abs_t).real();
    f += overlap * overlap;
  }
  return f;
}

}  // namespace qtele
