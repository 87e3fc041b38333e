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

// Independent reference computations for tests. Nothing here calls into the
// library's decompositions.

#include <array>
#include <cmath>
#include <complex>

#include <Eigen/Dense>

namespace qtele::oracle {

using Complex = std::complex<double>;

/// Eigenvalues of a 2x2 Hermitian matrix from its characteristic polynomial,
/// descending.
inline std::array<double, 2> hermitian_eigenvalues_2x2(const Eigen::Matrix2cd& h) {
  const double tr = (h(0, 0) + h(1, 1)).real();
  const double det = (h(0, 0) * h(1, 1) - h(0, 1) * h(1, 0)).real();
  const double disc = std::sqrt(std::max(tr * tr - 4.0 * det, 0.0));
  return {(tr + disc) / 2.0, (tr - disc) / 2.0};
}

/// Square root of a 2x2 PSD matrix: (A + sqrt(det A) 1) / sqrt(Tr A + 2 sqrt(det A)).
inline Eigen::Matrix2cd sqrt_psd_2x2(const Eigen::Matrix2cd& a) {
  const double det = std::max((a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)).real(), 0.0);
  const double s = std::sqrt(det);
  const double t = std::sqrt((a(0, 0) + a(1, 1)).real() + 2.0 * s);
  return (a + s * Eigen::Matrix2cd::Identity()) / t;
}

/// rho_A[a][a'] = sum_b v[a d + b] conj(v[a' d + b]) by explicit index sums.
inline Eigen::MatrixXcd partial_trace_b(const Eigen::VectorXcd& v, int d) {
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(d, d);
  for (int a = 0; a < d; ++a)
    for (int ap = 0; ap < d; ++ap)
      for (int b = 0; b < d; ++b) rho(a, ap) += v[a * d + b] * std::conj(v[ap * d + b]);
  return rho;
}

/// rho_B[b][b'] = sum_a v[a d + b] conj(v[a d + b']).
inline Eigen::MatrixXcd partial_trace_a(const Eigen::VectorXcd& v, int d) {
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(d, d);
  for (int b = 0; b < d; ++b)
    for (int bp = 0; bp < d; ++bp)
      for (int a = 0; a < d; ++a) rho(b, bp) += v[a * d + b] * std::conj(v[a * d + bp]);
  return rho;
}

/// Standard error of a Bernoulli frequency estimate.
inline double binomial_stderr(double p, double n) { return std::sqrt(p * (1.0 - p) / n); }

}  // namespace qtele::oracle
