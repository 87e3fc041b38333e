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

#include <string_view>
#include <utility>

#include "qtele/qlinalg.hpp"

namespace qtele {

/// Reshapes a length-d^2 vector into the d x d operator C with
/// C[j][k] = v[j*d + k], i.e. |C> = sum_jk C_jk |j> (x) |k>.
ComplexMatrix vec_to_op(const ComplexVector& v, Eigen::Index d);

/// Inverse of vec_to_op.
ComplexVector op_to_vec(const ComplexMatrix& c);

/// Hilbert-Schmidt inner product Tr(C^dagger D); equals <C|D> on the vector
/// side.
Complex hs_inner(const ComplexMatrix& c, const ComplexMatrix& d);

/// <psi| C |phi*>, which equals <psi (x) phi | C>. The conjugation is taken
/// in the computational basis, so the correspondence is basis dependent.
Complex component_overlap(
    const ComplexVector& psi, const ComplexVector& phi, const ComplexMatrix& c);

/// A pure state of H (x) H held in both vector and operator form.
class BipartiteState {
 public:
  /// From the operator form; no normalization is applied.
  explicit BipartiteState(ComplexMatrix operator_form);

  /// From a length-d^2 amplitude vector.
  static BipartiteState from_vector(const ComplexVector& v, Eigen::Index d);

  /// (1/sqrt d) sum_a |a>|a>, i.e. C = identity / sqrt d.
  static BipartiteState maximally_entangled(Eigen::Index d);

  /// |j> (x) |k>, i.e. C = |j><k|.
  static BipartiteState product(Eigen::Index d, Eigen::Index j, Eigen::Index k);

  Eigen::Index local_dim() const { return op_.rows(); }
  const ComplexMatrix& operator_form() const { return op_; }
  const ComplexVector& vector() const { return vec_; }

  /// Tr(C^dagger C)
  double norm_squared() const;
  bool is_normalized(double tolerance = tol::kNormalization) const;
  BipartiteState normalized() const;

  /// (U (x) V)|C>, whose operator form is U C V^t.
  BipartiteState apply_local(const ComplexMatrix& u, const ComplexMatrix& v) const;

 private:
  ComplexMatrix op_;
  ComplexVector vec_;
};

enum class EntanglementClass { MaximallyEntangled, ProductState, Generic };

std::string_view to_string(EntanglementClass c);

struct EntanglementReport {
  RealVector schmidt_coefficients;  // descending
  double entropy_conventional = 0.0;  // -sum s^2 ln s^2, nats
  double entropy_amplitude = 0.0;  // -sum s ln s, i.e. -Tr|C| ln|C|
  EntanglementClass classification = EntanglementClass::Generic;
  Eigen::Index rank = 0;
};

/// Schmidt spectrum, both entropy conventions, rank and classification.
/// Throws NormalizationError for an unnormalized state.
EntanglementReport analyze_entanglement(const BipartiteState& state);

struct ReducedStates {
  ComplexMatrix alice;  // C C^dagger
  ComplexMatrix bob;  // (C^dagger C)^t
};

ReducedStates reduced_states(const BipartiteState& state);

}  // namespace qtele
