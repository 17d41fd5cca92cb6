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

#ifndef SGQ_MEASURES_HPP_
#define SGQ_MEASURES_HPP_

// Probability calculus on the firefly box: quadrant (Boolean) distributions,
// the window probabilities they induce, and the projector realization of the
// window observables on the real plane.
//
// Conventions. Quadrants: 1 lower-left, 2 upper-left, 3 lower-right,
// 4 upper-right. The bottom window splits the box into l = {1,2} and
// r = {3,4}; the side window into d = {1,3} and u = {2,4}. In the projector
// picture the u-projector looks along direction 0 and the l-projector along
// the representation angle.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include <Eigen/Dense>

#include "sgq/errors.hpp"
#include "sgq/tolerances.hpp"

namespace sgq {

template <typename Scalar>
using Vector2 = Eigen::Matrix<Scalar, 2, 1>;
template <typename Scalar>
using Matrix2 = Eigen::Matrix<Scalar, 2, 2>;

template <typename Scalar>
struct BooleanState {
  Scalar w1, w2, w3, w4;
};

template <typename Scalar>
struct WindowProbabilities {
  Scalar u, d, l, r;

  Scalar sum() const { return (l + r) + (u + d); }
};

template <typename Scalar>
struct Representation {
  Scalar theta;  // first player's projector angle
  Scalar tau;    // second player's projector angle
};

// Throws DomainError(kInvalidProbability) unless every component lies in
// [0, 1] and the four sum to 1, both within kProbabilityTol.
template <typename Scalar>
BooleanState<Scalar> make_boolean_state(Scalar w1, Scalar w2, Scalar w3, Scalar w4) {
  const Scalar tol(kProbabilityTol);
  for (Scalar w : {w1, w2, w3, w4}) {
    if (!(w >= -tol && w <= Scalar(1) + tol))
      throw DomainError(ErrorKind::kInvalidProbability, "quadrant probability outside [0, 1]");
  }
  using std::abs;
  if (abs(w1 + w2 + w3 + w4 - Scalar(1)) > tol)
    throw DomainError(ErrorKind::kInvalidProbability, "quadrant probabilities do not sum to 1");
  return {w1, w2, w3, w4};
}

// Builds complementary pairs from the two "positive" windows.
template <typename Scalar>
WindowProbabilities<Scalar> make_windows(Scalar u, Scalar l) {
  const Scalar tol(kProbabilityTol);
  if (!(u >= -tol && u <= Scalar(1) + tol && l >= -tol && l <= Scalar(1) + tol))
    throw DomainError(ErrorKind::kInvalidProbability, "window probability outside [0, 1]");
  return {u, Scalar(1) - u, l, Scalar(1) - l};
}

template <typename Scalar>
bool is_degenerate_angle(Scalar angle, Scalar tol = Scalar(kDegenerateAngleTol)) {
  using std::abs;
  return abs(angle) <= tol || abs(angle - std::numbers::pi_v<Scalar> / 2) <= tol;
}

// Representation angles must lie strictly inside (0, pi/2).
template <typename Scalar>
Representation<Scalar> make_representation(Scalar theta, Scalar tau) {
  const Scalar half_pi = std::numbers::pi_v<Scalar> / 2;
  for (Scalar a : {theta, tau}) {
    if (is_degenerate_angle(a))
      throw DomainError(ErrorKind::kDegenerateRepresentation,
                        "representation angle at 0 or pi/2: the window observables commute");
    if (!(a > Scalar(0) && a < half_pi))
      throw DomainError(ErrorKind::kDegenerateRepresentation,
                        "representation angle outside (0, pi/2)");
  }
  return {theta, tau};
}

// w_l = w1 + w2 and w_d = w1 + w3; the opposite halves are taken as
// complements, so each pair sums to exactly 1 and the four to exactly 2.
template <typename Scalar>
WindowProbabilities<Scalar> boolean_to_windows(const BooleanState<Scalar>& s) {
  const Scalar l = s.w1 + s.w2;
  const Scalar d = s.w1 + s.w3;
  return {Scalar(1) - d, d, l, Scalar(1) - l};
}

// Values of w1 compatible with the given window marginals.
template <typename Scalar>
std::pair<Scalar, Scalar> free_parameter_interval(const WindowProbabilities<Scalar>& w) {
  using std::max;
  using std::min;
  return {max(Scalar(0), w.l + w.d - Scalar(1)), min(w.l, w.d)};
}

// The window marginals fix the quadrant distribution only up to w1 = `free`.
template <typename Scalar>
BooleanState<Scalar> windows_to_boolean(const WindowProbabilities<Scalar>& w, Scalar free) {
  const auto [lo, hi] = free_parameter_interval(w);
  const Scalar tol(kProbabilityTol);
  if (!(free >= lo - tol && free <= hi + tol)) {
    throw DomainError(ErrorKind::kInfeasibleParameter,
                      "free quadrant probability outside its feasible interval",
                      {{"lower", static_cast<double>(lo)}, {"upper", static_cast<double>(hi)},
                       {"free", static_cast<double>(free)}});
  }
  return {free, w.l - free, w.d - free, Scalar(1) - w.l - w.d + free};
}

template <typename Scalar>
Vector2<Scalar> unit_vector(Scalar angle) {
  using std::cos;
  using std::sin;
  return {cos(angle), sin(angle)};
}

// Rank-one orthogonal projector onto the line at `angle`.
template <typename Scalar>
Matrix2<Scalar> projector(Scalar angle) {
  const Vector2<Scalar> v = unit_vector(angle);
  return v * v.transpose();
}

// w = <psi, P psi> for the four window projectors under projector angle
// `theta`. The same map serves either player with its own angle.
template <typename Scalar>
WindowProbabilities<Scalar> projector_probabilities(const Vector2<Scalar>& psi, Scalar theta) {
  const Scalar half_pi = std::numbers::pi_v<Scalar> / 2;
  auto expect = [&](Scalar angle) { return psi.dot(projector(angle) * psi); };
  return {expect(Scalar(0)), expect(half_pi), expect(theta), expect(theta + half_pi)};
}

// A wave vector at angle alpha and a strategy vector at angle 2*alpha - theta
// describe the same probabilities.
template <typename Scalar>
Scalar wave_to_strategy_angle(Scalar alpha, Scalar theta) {
  return Scalar(2) * alpha - theta;
}

template <typename Scalar>
Scalar strategy_to_wave_angle(Scalar strategy_angle, Scalar theta) {
  return (strategy_angle + theta) / Scalar(2);
}

// Zero exactly when (w_u, w_l) is realizable by a wave vector at angle theta.
template <typename Scalar>
Scalar ellipse_residual(Scalar w_u, Scalar w_l, Scalar theta) {
  if (is_degenerate_angle(theta))
    throw DomainError(ErrorKind::kDegenerateRepresentation,
                      "constraint ellipse degenerates at theta = 0 or pi/2");
  using std::cos;
  using std::sin;
  const Scalar c = cos(theta);
  const Scalar s = sin(theta);
  const Scalar a = w_u + w_l - Scalar(1);
  const Scalar b = w_l - w_u;
  return a * a / (c * c) + b * b / (s * s) - Scalar(1);
}

}  // namespace sgq

#endif  // SGQ_MEASURES_HPP_
