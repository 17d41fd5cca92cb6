// Copyright 2026 The sgq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SGQ_TOLERANCES_HPP_
#define SGQ_TOLERANCES_HPP_

namespace sgq {

// Absolute tolerance for probability identities (normalization, ranges).
inline constexpr double kProbabilityTol = 1e-12;
// Representation angles closer than this to 0 or pi/2 are degenerate (rad).
inline constexpr double kDegenerateAngleTol = 1e-9;

// Numerical thresholds of the equilibrium solver and its oracles. All are
// overridable from the command line.
struct Tolerances {
  // |<Az,z> - |z|^3| <= multiplicity_rel * |z|^3 classifies as multiple.
  double multiplicity_rel = 1e-9;
  // Residual bound for eigen-pair and common-eigenvector checks.
  double eigen_residual = 1e-10;
  // |Delta| <= degenerate_delta_rel * n * m classifies as degenerate.
  double degenerate_delta_rel = 1e-12;
  double degenerate_angle = kDegenerateAngleTol;
  // Saddle oracle slack, relative to c1 + c2 + c3 + c4.
  double oracle_eps_rel = 1e-9;
};

}  // namespace sgq

#endif  // SGQ_TOLERANCES_HPP_
