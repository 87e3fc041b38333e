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
#include <string>
#include <string_view>
#include <vector>

#include "qtele/qlinalg.hpp"

namespace qtele {

enum class BasisKind { Bell, Product, Custom };

std::string_view to_string(BasisKind k);

/// An ordered family of d^2 operators C_xi on a d-dimensional space, indexed
/// by xi = j*d + k. Immutable once built. The constructor checks only shape;
/// use validate_basis for the orthonormality and completeness relations.
class OperatorBasis {
 public:
  /// Throws StructureError unless there are d^2 elements, each d x d.
  OperatorBasis(Eigen::Index local_dim, std::vector<ComplexMatrix> elements,
                BasisKind kind = BasisKind::Custom);

  Eigen::Index local_dim() const { return local_dim_; }
  std::size_t size() const { return elements_.size(); }
  BasisKind kind() const { return kind_; }
  const std::vector<ComplexMatrix>& elements() const { return elements_; }
  const ComplexMatrix& operator[](std::size_t xi) const { return elements_[xi]; }

  /// Maps each element to U C_xi V. Orthonormality and completeness survive
  /// for unitary U, V; the result is tagged Custom.
  OperatorBasis rotated(const ComplexMatrix& u, const ComplexMatrix& v) const;

 private:
  Eigen::Index local_dim_;
  std::vector<ComplexMatrix> elements_;
  BasisKind kind_;
};

/// Generalized Bell basis: |C_jk> = d^{-1/2} sum_a w^{k a} |a> (x) |a - j>,
/// with w = exp(2 pi i / d) and a - j taken mod d.
///
/// The phase depends on the summation index a. A phase w^{j k} that is
/// constant in a would make the d states with equal j coincide up to a global
/// phase, and the family would not be orthonormal.
OperatorBasis bell_basis(Eigen::Index d);

/// C_jk = |j><k|, the operator form of |j> (x) |k>.
OperatorBasis product_basis(Eigen::Index d);

struct BasisValidation {
  bool passed = false;
  double orthonormality_residual = 0.0;  // max |Tr(C_a^dag C_b) - delta_ab|
  double completeness_residual = 0.0;  // max |sum C^dag A C - Tr(A) 1|_entry
  std::vector<std::string> violations;  // names of failed relations

  std::string summary() const;
};

/// Checks Tr(C_a^dagger C_b) = delta_ab exhaustively and
/// sum_xi C_xi^dagger A C_xi = Tr(A) identity for `trials` random complex A
/// (drawn from `seed`). Residuals above `tolerance` are reported, not thrown.
BasisValidation validate_basis(
    const OperatorBasis& basis, int trials = 8, double tolerance = tol::kBasis,
    std::uint64_t seed = 0x5eed'ba5eULL);

}  // namespace qtele
