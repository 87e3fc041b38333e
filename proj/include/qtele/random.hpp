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
#include <random>

#include "qtele/qlinalg.hpp"

namespace qtele {

/// Seeded random source. The bitstream is a function of the seed only, and
/// uniform/normal variates are derived by hand so results do not depend on
/// the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  /// Independent child stream for partitioned work. The child depends on
  /// this generator's seed and stream path, not on how many numbers have been
  /// drawn, so splits can be nested.
  Rng split(std::uint64_t stream) const;

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  /// Standard normal (Box-Muller).
  double normal();
  /// Circular complex Gaussian with E|z|^2 = 1.
  Complex complex_normal();

  ComplexVector complex_gaussian_vector(Eigen::Index n);
  ComplexMatrix complex_gaussian_matrix(Eigen::Index rows, Eigen::Index cols);

 private:
  Rng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace qtele
