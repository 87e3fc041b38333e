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

namespace qtele::tol {

// Defaults sized for double precision at d <= 32.
inline constexpr double kReconstruction = 1e-10;
inline constexpr double kNormalization = 1e-12;
inline constexpr double kRank = 1e-10;
inline constexpr double kSpread = 1e-10;
inline constexpr double kBasis = 1e-10;
inline constexpr double kIdentity = 1e-10;

// Number of standard errors allowed between an analytic value and its
// Monte-Carlo estimate.
inline constexpr double kSigmaBand = 4.0;
// Absolute slack added to the sigma band for zero-variance estimates.
inline constexpr double kStatisticalFloor = 1e-10;

}  // namespace qtele::tol
