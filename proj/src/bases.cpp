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

#include "qtele/bases.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "qtele/choi.hpp"
#include "qtele/errors.hpp"
#include "qtele/random.hpp"

namespace qtele {

std::string_view to_string(BasisKind k) {
  switch (k) {
    case BasisKind::Bell: return "bell";
    case BasisKind::Product: return "product";
    case BasisKind::Custom: return "custom";
  }
  return "custom";
}

OperatorBasis::OperatorBasis(
    Eigen::Index local_dim, std::vector<ComplexMatrix> elements, BasisKind kind)
    : local_dim_(local_dim), elements_(std::move(elements)), kind_(kind) {
  if (local_dim_ <= 0) {
    throw StructureError("OperatorBasis: local dimension must be positive");
  }
  const auto expected = static_cast<std::size_t>(local_dim_ * local_dim_);
  if (elements_.size() != expected) {
    throw StructureError(
        "OperatorBasis: expected " + std::to_string(expected) +
        " elements for d = " + std::to_string(local_dim_) + ", got " +
        std::to_string(elements_.size()));
  }
  for (std::size_t xi = 0; xi < elements_.size(); ++xi) {
    const auto& e = elements_[xi];
    if (e.rows() != local_dim_ || e.cols() != local_dim_) {
      throw StructureError(
          "OperatorBasis: element " + std::to_string(xi) + " is " +
          std::to_string(e.rows()) + "x" + std::to_string(e.cols()));
    }
    require_finite(e, "OperatorBasis");
  }
}

OperatorBasis OperatorBasis::rotated(
    const ComplexMatrix& u, const ComplexMatrix& v) const {
  std::vector<ComplexMatrix> out;
  out.reserve(elements_.size());
  for (const auto& e : elements_) out.push_back(u * e * v);
  return OperatorBasis(local_dim_, std::move(out), BasisKind::Custom);
}

OperatorBasis bell_basis(Eigen::Index d) {
  if (d <= 0) throw DimensionError("bell_basis: d must be positive");
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  std::vector<ComplexMatrix> elements;
  elements.reserve(static_cast<std::size_t>(d * d));
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index k = 0; k < d; ++k) {
      ComplexMatrix c = ComplexMatrix::Zero(d, d);
      for (Eigen::Index a = 0; a < d; ++a) {
        // Reduce k*a first so the angle stays in [0, 2 pi).
        const double angle = 2.0 * std::numbers::pi *
                             static_cast<double>((k * a) % d) /
                             static_cast<double>(d);
        c(a, ((a - j) % d + d) % d) = std::polar(scale, angle);
      }
      elements.push_back(std::move(c));
    }
  }
  return OperatorBasis(d, std::move(elements), BasisKind::Bell);
}

OperatorBasis product_basis(Eigen::Index d) {
  if (d <= 0) throw DimensionError("product_basis: d must be positive");
  std::vector<ComplexMatrix> elements;
  elements.reserve(static_cast<std::size_t>(d * d));
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index k = 0; k < d; ++k) {
      ComplexMatrix c = ComplexMatrix::Zero(d, d);
      c(j, k) = 1.0;
      elements.push_back(std::move(c));
    }
  }
  return OperatorBasis(d, std::move(elements), BasisKind::Product);
}

std::string BasisValidation::summary() const {
  std::ostringstream os;
  os.precision(3);
  os << (passed ? "basis valid" : "basis invalid")
     << " (orthonormality residual " << orthonormality_residual
     << ", completeness residual " << completeness_residual << ")";
  for (const auto& v : violations) os << "; violated: " << v;
  return os.str();
}

BasisValidation validate_basis(
    const OperatorBasis& basis, int trials, double tolerance, std::uint64_t seed) {
  if (trials <= 0) throw ConfigError("validate_basis: trials must be positive");
  BasisValidation out;
  const auto& e = basis.elements();
  const Eigen::Index d = basis.local_dim();

  for (std::size_t a = 0; a < e.size(); ++a) {
    for (std::size_t b = a; b < e.size(); ++b) {
      const Complex expected = a == b ? 1.0 : 0.0;
      out.orthonormality_residual = std::max(
          out.orthonormality_residual, std::abs(hs_inner(e[a], e[b]) - expected));
    }
  }

  Rng rng(seed);
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  for (int t = 0; t < trials; ++t) {
    const ComplexMatrix probe = rng.complex_gaussian_matrix(d, d);
    ComplexMatrix sum = ComplexMatrix::Zero(d, d);
    for (const auto& c : e) sum += c.adjoint() * probe * c;
    const double residual = (sum - probe.trace() * id).cwiseAbs().maxCoeff();
    out.completeness_residual = std::max(out.completeness_residual, residual);
  }

  if (out.orthonormality_residual > tolerance) {
    out.violations.emplace_back("orthonormality Tr(C_a^dagger C_b) = delta_ab");
  }
  if (out.completeness_residual > tolerance) {
    out.violations.emplace_back(
        "completeness sum_xi C_xi^dagger A C_xi = Tr(A) identity");
  }
  out.passed = out.violations.empty();
  return out;
}

}  // namespace qtele
