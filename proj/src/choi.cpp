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

#include "qtele/choi.hpp"

#include <cmath>
#include <string>

#include "qtele/errors.hpp"

namespace qtele {

namespace {

// 0 ln 0 := 0
double x_log_x(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

void require_normalized(const BipartiteState& s, const char* what) {
  if (!s.is_normalized()) {
    throw NormalizationError(
        std::string(what) + ": bipartite state has Tr(C^dagger C) = " +
        std::to_string(s.norm_squared()) + ", expected 1");
  }
}

}  // namespace

ComplexMatrix vec_to_op(const ComplexVector& v, Eigen::Index d) {
  if (d <= 0 || v.size() != d * d) {
    throw DimensionError(
        "vec_to_op: vector of length " + std::to_string(v.size()) +
        " is not d^2 for d = " + std::to_string(d));
  }
  ComplexMatrix c(d, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index k = 0; k < d; ++k) c(j, k) = v[j * d + k];
  }
  return c;
}

ComplexVector op_to_vec(const ComplexMatrix& c) {
  require_square(c, "op_to_vec");
  const Eigen::Index d = c.rows();
  ComplexVector v(d * d);
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index k = 0; k < d; ++k) v[j * d + k] = c(j, k);
  }
  return v;
}

Complex hs_inner(const ComplexMatrix& c, const ComplexMatrix& d) {
  require_square(c, "hs_inner");
  if (c.rows() != d.rows() || c.cols() != d.cols()) {
    throw DimensionError("hs_inner: operand shapes differ");
  }
  // Tr(C^dagger D) = sum_jk conj(C_jk) D_jk
  return (c.conjugate().cwiseProduct(d)).sum();
}

Complex component_overlap(
    const ComplexVector& psi, const ComplexVector& phi, const ComplexMatrix& c) {
  require_square(c, "component_overlap");
  if (psi.size() != c.rows() || phi.size() != c.rows()) {
    throw DimensionError("component_overlap: state and operator dimensions differ");
  }
  return psi.dot(c * phi.conjugate());
}

BipartiteState::BipartiteState(ComplexMatrix operator_form)
    : op_(std::move(operator_form)) {
  require_square(op_, "BipartiteState");
  require_finite(op_, "BipartiteState");
  vec_ = op_to_vec(op_);
}

BipartiteState BipartiteState::from_vector(const ComplexVector& v, Eigen::Index d) {
  return BipartiteState(vec_to_op(v, d));
}

BipartiteState BipartiteState::maximally_entangled(Eigen::Index d) {
  if (d <= 0) throw DimensionError("maximally_entangled: d must be positive");
  return BipartiteState(
      ComplexMatrix::Identity(d, d) / std::sqrt(static_cast<double>(d)));
}

BipartiteState BipartiteState::product(
    Eigen::Index d, Eigen::Index j, Eigen::Index k) {
  if (d <= 0 || j < 0 || k < 0 || j >= d || k >= d) {
    throw DimensionError("product: index out of range");
  }
  ComplexMatrix c = ComplexMatrix::Zero(d, d);
  c(j, k) = 1.0;
  return BipartiteState(std::move(c));
}

double BipartiteState::norm_squared() const { return op_.squaredNorm(); }

bool BipartiteState::is_normalized(double tolerance) const {
  return std::abs(std::sqrt(norm_squared()) - 1.0) <= tolerance;
}

BipartiteState BipartiteState::normalized() const {
  const double n = std::sqrt(norm_squared());
  if (n == 0.0) throw InvalidInputError("BipartiteState: zero state");
  return BipartiteState(op_ / n);
}

BipartiteState BipartiteState::apply_local(
    const ComplexMatrix& u, const ComplexMatrix& v) const {
  if (u.rows() != local_dim() || u.cols() != local_dim() ||
      v.rows() != local_dim() || v.cols() != local_dim()) {
    throw DimensionError("apply_local: local operator dimension mismatch");
  }
  return BipartiteState(u * op_ * v.transpose());
}

std::string_view to_string(EntanglementClass c) {
  switch (c) {
    case EntanglementClass::MaximallyEntangled: return "MaximallyEntangled";
    case EntanglementClass::ProductState: return "ProductState";
    case EntanglementClass::Generic: return "Generic";
  }
  return "Generic";
}

EntanglementReport analyze_entanglement(const BipartiteState& state) {
  require_normalized(state, "analyze_entanglement");
  EntanglementReport report;
  report.schmidt_coefficients = svd(state.operator_form()).singular_values;
  const RealVector& s = report.schmidt_coefficients;

  for (Eigen::Index i = 0; i < s.size(); ++i) {
    report.entropy_conventional -= x_log_x(s[i] * s[i]);
    report.entropy_amplitude -= x_log_x(s[i]);
    if (s[i] > tol::kRank) ++report.rank;
  }
  // Rounding can leave -0.0 or a tiny negative value for product states.
  report.entropy_conventional = std::max(report.entropy_conventional, 0.0);
  report.entropy_amplitude = std::max(report.entropy_amplitude, 0.0);

  const double spread = (s.maxCoeff() - s.minCoeff()) / s.maxCoeff();
  if (report.rank == 1) {
    report.classification = EntanglementClass::ProductState;
  } else if (spread <= tol::kSpread) {
    report.classification = EntanglementClass::MaximallyEntangled;
  }
  return report;
}

ReducedStates reduced_states(const BipartiteState& state) {
  require_normalized(state, "reduced_states");
  const ComplexMatrix& c = state.operator_form();
  return {c * c.adjoint(), (c.adjoint() * c).transpose()};
}

}  // namespace qtele
