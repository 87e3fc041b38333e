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

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "qtele/tolerances.hpp"

namespace qtele {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// A pure state: a complex vector of unit Euclidean norm.
///
/// Construction either checks the norm (`checked`) or rescales (`normalize`),
/// so every live StateVector satisfies |norm - 1| <= tol::kNormalization.
class StateVector {
 public:
  /// Rescales `amplitudes` to unit norm. Throws InvalidInputError on a zero or
  /// non-finite vector.
  static StateVector normalize(ComplexVector amplitudes);

  /// Accepts `amplitudes` only if already normalized within `tolerance`;
  /// throws NormalizationError otherwise.
  static StateVector checked(
      ComplexVector amplitudes, double tolerance = tol::kNormalization);

  /// Computational basis state |index> of dimension `dim`.
  static StateVector basis(Eigen::Index dim, Eigen::Index index);

  Eigen::Index dim() const { return amplitudes_.size(); }
  const ComplexVector& amplitudes() const { return amplitudes_; }
  Complex operator[](Eigen::Index i) const { return amplitudes_[i]; }

 private:
  explicit StateVector(ComplexVector amplitudes)
      : amplitudes_(std::move(amplitudes)) {}

  ComplexVector amplitudes_;
};

struct SvdFactors {
  ComplexMatrix left;
  RealVector singular_values;  // descending, nonnegative
  ComplexMatrix right;

  /// left * diag(singular_values) * right^dagger
  ComplexMatrix reconstruct() const;
};

struct PolarFactors {
  ComplexMatrix unitary;
  ComplexMatrix positive;
};

/// Throws InvalidInputError if any entry is NaN or infinite.
void require_finite(const ComplexMatrix& m, const char* what);
void require_finite(const ComplexVector& v, const char* what);
void require_square(const ComplexMatrix& m, const char* what);

/// Full singular value decomposition of a square matrix. Singular values are
/// the Schmidt coefficients when `m` is the operator form of a bipartite
/// state.
SvdFactors svd(const ComplexMatrix& m);

/// m = U * P with P = sqrt(m^dagger m) and U unitary. For singular m the
/// unitary is the SVD completion W V^dagger, which is one of many valid
/// choices; P is unique.
PolarFactors polar_decompose(const ComplexMatrix& m);

/// sqrt(m^dagger m).
ComplexMatrix operator_abs(const ComplexMatrix& m);

/// Kronecker product; (A (x) B)[i*rB + k][j*cB + l] = A[i][j] * B[k][l], which
/// maps |j> (x) |k> to index j*d + k.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector tensor_product(const ComplexVector& a, const ComplexVector& b);

Complex trace(const ComplexMatrix& m);

bool is_unitary(const ComplexMatrix& m, double tolerance = tol::kIdentity);
bool is_hermitian(const ComplexMatrix& m, double tolerance = tol::kIdentity);

/// Projector |v><v|.
ComplexMatrix outer(const ComplexVector& ket, const ComplexVector& bra);

/// <psi| m |psi>
Complex expectation(const ComplexVector& psi, const ComplexMatrix& m);

/// |<a|b>|^2 for normalized states; insensitive to global phase.
double fidelity(const StateVector& a, const StateVector& b);

}  // namespace qtele
