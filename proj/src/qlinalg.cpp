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

#include "qtele/qlinalg.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "qtele/errors.hpp"

namespace qtele {

namespace {

Eigen::Index checked_mul(Eigen::Index a, Eigen::Index b) {
  Eigen::Index out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw DimensionError("tensor_product: dimension overflow");
  }
  return out;
}

}  // namespace

StateVector StateVector::normalize(ComplexVector amplitudes) {
  require_finite(amplitudes, "StateVector::normalize");
  const double norm = amplitudes.norm();
  if (amplitudes.size() == 0 || norm == 0.0) {
    throw InvalidInputError("StateVector::normalize: zero vector");
  }
  amplitudes /= norm;
  return StateVector(std::move(amplitudes));
}

StateVector StateVector::checked(ComplexVector amplitudes, double tolerance) {
  require_finite(amplitudes, "StateVector::checked");
  const double norm = amplitudes.norm();
  if (amplitudes.size() == 0 || std::abs(norm - 1.0) > tolerance) {
    throw NormalizationError(
        "state vector has norm " + std::to_string(norm) + ", expected 1");
  }
  return StateVector(std::move(amplitudes));
}

StateVector StateVector::basis(Eigen::Index dim, Eigen::Index index) {
  if (dim <= 0 || index < 0 || index >= dim) {
    throw DimensionError("StateVector::basis: index out of range");
  }
  ComplexVector v = ComplexVector::Zero(dim);
  v[index] = 1.0;
  return StateVector(std::move(v));
}

ComplexMatrix SvdFactors::reconstruct() const {
  return left * singular_values.cast<Complex>().asDiagonal() * right.adjoint();
}

void require_finite(const ComplexMatrix& m, const char* what) {
  if (!m.allFinite()) {
    throw InvalidInputError(std::string(what) + ": non-finite matrix entry");
  }
}

void require_finite(const ComplexVector& v, const char* what) {
  if (!v.allFinite()) {
    throw InvalidInputError(std::string(what) + ": non-finite vector entry");
  }
}

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw DimensionError(
        std::string(what) + ": expected a nonempty square matrix, got " +
        std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

SvdFactors svd(const ComplexMatrix& m) {
  require_finite(m, "svd");
  require_square(m, "svd");
  Eigen::JacobiSVD<ComplexMatrix> solver(
      m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  // Eigen already sorts descending.
  return {solver.matrixU(), solver.singularValues(), solver.matrixV()};
}

PolarFactors polar_decompose(const ComplexMatrix& m) {
  const SvdFactors f = svd(m);
  ComplexMatrix positive =
      f.right * f.singular_values.cast<Complex>().asDiagonal() *
      f.right.adjoint();
  // Symmetrize away rounding so callers get an exactly Hermitian factor.
  positive = 0.5 * (positive + positive.adjoint()).eval();
  return {f.left * f.right.adjoint(), std::move(positive)};
}

ComplexMatrix operator_abs(const ComplexMatrix& m) {
  return polar_decompose(m).positive;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_finite(a, "tensor_product");
  require_finite(b, "tensor_product");
  const Eigen::Index rows = checked_mul(a.rows(), b.rows());
  const Eigen::Index cols = checked_mul(a.cols(), b.cols());
  checked_mul(rows, cols);
  ComplexMatrix out(rows, cols);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexVector tensor_product(const ComplexVector& a, const ComplexVector& b) {
  const Eigen::Index n = checked_mul(a.size(), b.size());
  ComplexVector out(n);
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a[i] * b;
  }
  return out;
}

Complex trace(const ComplexMatrix& m) {
  require_square(m, "trace");
  return m.trace();
}

bool is_unitary(const ComplexMatrix& m, double tolerance) {
  if (m.rows() != m.cols()) return false;
  const auto id = ComplexMatrix::Identity(m.rows(), m.cols());
  return (m.adjoint() * m - id).norm() <= tolerance;
}

bool is_hermitian(const ComplexMatrix& m, double tolerance) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).norm() <= tolerance;
}

ComplexMatrix outer(const ComplexVector& ket, const ComplexVector& bra) {
  return ket * bra.adjoint();
}

Complex expectation(const ComplexVector& psi, const ComplexMatrix& m) {
  if (m.cols() != psi.size() || m.rows() != psi.size()) {
    throw DimensionError("expectation: operator and state dimensions differ");
  }
  return psi.dot(m * psi);
}

double fidelity(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("fidelity: state dimensions differ");
  }
  return std::norm(a.amplitudes().dot(b.amplitudes()));
}

}  // namespace qtele
