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

#ifndef SGQ_PAYOFF_HPP_
#define SGQ_PAYOFF_HPP_

// Zero-sum payoff of the two-box game. The first player (A) receives c_j
// from the second (B) on four outcome pairs:
//
//   A sees u, B sees d  -> c3        A sees l, B sees r  -> c4
//   A sees d, B sees u  -> c1        A sees r, B sees l  -> c2
//
// Strategies are unit vectors x, y on the plane. A strategy maps to window
// probabilities through s = M(phi) x with w_u = (1 + s0) / 2 and
// w_l = (1 + s1) / 2, the same map for both players.

#include <cmath>

#include "sgq/errors.hpp"
#include "sgq/measures.hpp"

namespace sgq {

template <typename Scalar>
struct PayoffMatrix {
  Scalar c1, c2, c3, c4;

  Scalar total() const { return c1 + c2 + c3 + c4; }
};

template <typename Scalar>
PayoffMatrix<Scalar> make_payoff(Scalar c1, Scalar c2, Scalar c3, Scalar c4) {
  for (Scalar c : {c1, c2, c3, c4}) {
    if (!(c > Scalar(0)) || !std::isfinite(static_cast<double>(c)))
      throw DomainError(ErrorKind::kInvalidPayoff, "payoff coefficients must be positive and finite");
  }
  return {c1, c2, c3, c4};
}

template <typename Scalar>
struct GameConstants {
  Scalar n;  // c1 + c3
  Scalar m;  // c2 + c4
  Vector2<Scalar> omega;
  Matrix2<Scalar> C;
  Scalar delta;  // n * omega_1^2 - m * omega_0^2
};

template <typename Scalar>
GameConstants<Scalar> game_constants(const PayoffMatrix<Scalar>& c) {
  GameConstants<Scalar> k;
  k.n = c.c1 + c.c3;
  k.m = c.c2 + c.c4;
  k.omega << c.c3 - c.c1, c.c4 - c.c2;
  k.C << k.n, Scalar(0), Scalar(0), k.m;
  k.delta = k.n * k.omega(1) * k.omega(1) - k.m * k.omega(0) * k.omega(0);
  return k;
}

// M(phi) = [[cos phi, -sin phi], [cos phi, sin phi]].
template <typename Scalar>
Matrix2<Scalar> representation_matrix(Scalar phi) {
  using std::cos;
  using std::sin;
  Matrix2<Scalar> M;
  M << cos(phi), -sin(phi), cos(phi), sin(phi);
  return M;
}

// A = M(theta)^T C M(tau).
template <typename Scalar>
Matrix2<Scalar> coupling_matrix(const PayoffMatrix<Scalar>& c, const Representation<Scalar>& rep) {
  const auto k = game_constants(c);
  return representation_matrix(rep.theta).transpose() * k.C * representation_matrix(rep.tau);
}

template <typename Scalar>
WindowProbabilities<Scalar> strategy_windows(const Vector2<Scalar>& x, Scalar phi) {
  const Vector2<Scalar> s = representation_matrix(phi) * x;
  const Scalar half(0.5);
  return {half * (Scalar(1) + s(0)), half * (Scalar(1) - s(0)), half * (Scalar(1) + s(1)),
          half * (Scalar(1) - s(1))};
}

// Expected receipt of A per round in which both players look at the same
// kind of window, from the two players' window probabilities.
template <typename Scalar>
Scalar quantum_payoff_probabilities(const PayoffMatrix<Scalar>& c, const WindowProbabilities<Scalar>& a,
                                    const WindowProbabilities<Scalar>& b) {
  return c.c3 * a.u * b.d + c.c1 * a.d * b.u + c.c4 * a.l * b.r + c.c2 * a.r * b.l;
}

// g(x, y) = -<x, A y> + <x, M(theta)^T omega> - <M(tau)^T omega, y>.
template <typename Scalar>
Scalar payoff_form(const PayoffMatrix<Scalar>& c, const Representation<Scalar>& rep,
                   const Vector2<Scalar>& x, const Vector2<Scalar>& y) {
  const auto k = game_constants(c);
  const Matrix2<Scalar> Mt = representation_matrix(rep.theta);
  const Matrix2<Scalar> Mu = representation_matrix(rep.tau);
  const Matrix2<Scalar> A = Mt.transpose() * k.C * Mu;
  return -x.dot(A * y) + x.dot(Mt.transpose() * k.omega) - (Mu.transpose() * k.omega).dot(y);
}

// <H> = (g(x, y) + tr C) / 4; x and y must be unit vectors.
template <typename Scalar>
Scalar quantum_payoff_vectors(const PayoffMatrix<Scalar>& c, const Representation<Scalar>& rep,
                              const Vector2<Scalar>& x, const Vector2<Scalar>& y) {
  const auto k = game_constants(c);
  return (payoff_form(c, rep, x, y) + k.C.trace()) / Scalar(4);
}

// Saddle value of the game played with unconstrained probabilities.
template <typename Scalar>
Scalar classical_value(const PayoffMatrix<Scalar>& c) {
  return c.c1 * c.c3 / (c.c1 + c.c3) + c.c2 * c.c4 / (c.c2 + c.c4);
}

}  // namespace sgq

#endif  // SGQ_PAYOFF_HPP_
