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

#ifndef SGQ_EQUILIBRIUM_HPP_
#define SGQ_EQUILIBRIUM_HPP_

// Closed-form eigenequilibria of the two-box game.
//
// An equilibrium (x, y) is an eigenequilibrium when it is an eigenvector of
// the block matrix [[0, A], [A^T, 0]], i.e. A y = lambda x and A^T x = lambda y.
// For a non-degenerate game such equilibria force theta = tau with
//
//   cos 2 theta = (m - n) omega_0 omega_1 / Delta,
//
// after which z = M^T omega is an eigenvector of A = M^T C M with eigenvalue
// lambda = <Az, z> / |z|^2, and the comparison of <Az, z> with |z|^3 decides
// between one equilibrium, two, or none.

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sgq/errors.hpp"
#include "sgq/measures.hpp"
#include "sgq/payoff.hpp"
#include "sgq/tolerances.hpp"

namespace sgq {

enum class EquilibriumKind {
  kUnique,
  kMultiple,
  kNone,
  kDegenerateGame,
  kDegenerateOmega,
  kDegenerateRepresentation,
};

inline std::string_view to_string(EquilibriumKind kind) {
  switch (kind) {
    case EquilibriumKind::kUnique: return "unique";
    case EquilibriumKind::kMultiple: return "multiple";
    case EquilibriumKind::kNone: return "none";
    case EquilibriumKind::kDegenerateGame: return "degenerate-game";
    case EquilibriumKind::kDegenerateOmega: return "degenerate-omega";
    case EquilibriumKind::kDegenerateRepresentation: return "degenerate-representation";
  }
  return "unknown";
}

template <typename Scalar>
struct Equilibrium {
  Vector2<Scalar> x;
  Vector2<Scalar> y;
  WindowProbabilities<Scalar> probs_a;
  WindowProbabilities<Scalar> probs_b;
  Scalar value;
  Scalar eigenvalue;  // lambda with A y = lambda x, A^T x = lambda y
};

template <typename Scalar>
struct EquilibriumDiagnostics {
  Vector2<Scalar> omega = Vector2<Scalar>::Zero();
  Vector2<Scalar> z = Vector2<Scalar>::Zero();
  Scalar z_norm = 0;
  Scalar az_z = 0;          // <A z, z>
  Scalar z_norm_cubed = 0;  // |z|^3
  Scalar delta = 0;
  std::optional<Scalar> cos2theta;
};

template <typename Scalar>
struct EquilibriumReport {
  EquilibriumKind kind = EquilibriumKind::kNone;
  std::optional<Scalar> theta;  // equals tau whenever present
  std::vector<Equilibrium<Scalar>> equilibria;
  std::optional<Scalar> eigenvalue;
  EquilibriumDiagnostics<Scalar> diagnostics;
  std::vector<std::string> notes;
};

template <typename Scalar>
struct CommonEigenvectorCheck {
  bool holds = false;
  Scalar residual_theta = 0;  // |sin| of the angle between C M M^T omega and omega
  Scalar residual_tau = 0;
};

namespace detail {

template <typename Scalar>
Scalar parallel_residual(const Vector2<Scalar>& v, const Vector2<Scalar>& w) {
  using std::abs;
  const Scalar scale = v.norm() * w.norm();
  if (scale == Scalar(0)) return Scalar(0);
  return abs(v(0) * w(1) - v(1) * w(0)) / scale;
}

template <typename Scalar>
bool omega_vanishes(const PayoffMatrix<Scalar>& c, const GameConstants<Scalar>& k) {
  return k.omega.norm() <= Scalar(kProbabilityTol) * c.total();
}

}  // namespace detail

// Whether omega is an eigenvector of both C M(theta) M(theta)^T and
// C M(tau) M(tau)^T. Throws DomainError(kDegenerateOmega) when omega = 0.
template <typename Scalar>
CommonEigenvectorCheck<Scalar> common_eigenvector_check(const PayoffMatrix<Scalar>& c, Scalar theta,
                                                        Scalar tau, const Tolerances& tol = {}) {
  const auto k = game_constants(c);
  if (detail::omega_vanishes(c, k))
    throw DomainError(ErrorKind::kDegenerateOmega, "omega = 0: every vector is an eigenvector");
  auto residual = [&](Scalar phi) {
    const Matrix2<Scalar> M = representation_matrix(phi);
    const Vector2<Scalar> v = k.C * M * M.transpose() * k.omega;
    return detail::parallel_residual(v, k.omega);
  };
  CommonEigenvectorCheck<Scalar> out;
  out.residual_theta = residual(theta);
  out.residual_tau = residual(tau);
  out.holds = out.residual_theta < Scalar(tol.eigen_residual) && out.residual_tau < Scalar(tol.eigen_residual);
  return out;
}

template <typename Scalar>
struct AngleSolution {
  Scalar theta;
  Scalar cos2theta;
};

// The only representation angle (shared by both players) at which an
// eigenequilibrium of a non-degenerate game can exist. Throws DomainError
// with kDegenerateOmega, kDegenerateGame, kNoEigenequilibrium (|cos 2theta| > 1)
// or kDegenerateRepresentation (theta at 0 or pi/2).
template <typename Scalar>
AngleSolution<Scalar> solve_angle(const PayoffMatrix<Scalar>& c, const Tolerances& tol = {}) {
  using std::abs;
  using std::acos;
  const auto k = game_constants(c);
  if (detail::omega_vanishes(c, k))
    throw DomainError(ErrorKind::kDegenerateOmega, "omega = 0 (c1 = c3 and c2 = c4)");
  if (abs(k.delta) <= Scalar(tol.degenerate_delta_rel) * k.n * k.m)
    throw DomainError(ErrorKind::kDegenerateGame, "degenerate game: Delta = 0",
                      {{"delta", static_cast<double>(k.delta)}});
  const Scalar cos2 = (k.m - k.n) * k.omega(0) * k.omega(1) / k.delta;
  if (abs(cos2) > Scalar(1))
    throw DomainError(ErrorKind::kNoEigenequilibrium, "no representation angle: |cos 2theta| > 1",
                      {{"cos2theta", static_cast<double>(cos2)}});
  const Scalar theta = acos(cos2) / Scalar(2);
  if (is_degenerate_angle(theta, Scalar(tol.degenerate_angle)))
    throw DomainError(ErrorKind::kDegenerateRepresentation, "solved angle is 0 or pi/2",
                      {{"theta", static_cast<double>(theta)}});
  return {theta, cos2};
}

template <typename Scalar>
struct EigenPairCheck {
  bool holds = false;
  Scalar eigenvalue = 0;
  Scalar residual = 0;  // max(|A y - lambda x|, |A^T x - lambda y|) / max(1, |A|)
};

// Whether the unit pair (x, y) is an eigenvector of [[0, A], [A^T, 0]].
// Tested as A y = lambda x, A^T x = lambda y with the shared lambda = <x, A y>,
// without forming the 4x4 block.
template <typename Scalar>
EigenPairCheck<Scalar> is_eigen_pair(const PayoffMatrix<Scalar>& c, const Representation<Scalar>& rep,
                                     const Vector2<Scalar>& x, const Vector2<Scalar>& y,
                                     const Tolerances& tol = {}) {
  using std::max;
  const Matrix2<Scalar> A = coupling_matrix(c, rep);
  EigenPairCheck<Scalar> out;
  out.eigenvalue = x.dot(A * y);
  const Scalar r1 = (A * y - out.eigenvalue * x).norm();
  const Scalar r2 = (A.transpose() * x - out.eigenvalue * y).norm();
  out.residual = max(r1, r2) / max(Scalar(1), A.norm());
  out.holds = out.residual < Scalar(tol.eigen_residual);
  return out;
}

// Classifies the game and returns every eigenequilibrium. Degenerate inputs
// are reported through `kind`, never thrown.
template <typename Scalar>
EquilibriumReport<Scalar> solve_eigenequilibrium(const PayoffMatrix<Scalar>& c, const Tolerances& tol = {}) {
  using std::abs;
  EquilibriumReport<Scalar> report;
  const auto k = game_constants(c);
  report.diagnostics.omega = k.omega;
  report.diagnostics.delta = k.delta;

  AngleSolution<Scalar> angle;
  try {
    angle = solve_angle(c, tol);
  } catch (const DomainError& e) {
    switch (e.kind()) {
      case ErrorKind::kDegenerateOmega: report.kind = EquilibriumKind::kDegenerateOmega; break;
      case ErrorKind::kDegenerateGame: report.kind = EquilibriumKind::kDegenerateGame; break;
      case ErrorKind::kDegenerateRepresentation:
        report.kind = EquilibriumKind::kDegenerateRepresentation;
        break;
      default: report.kind = EquilibriumKind::kNone; break;
    }
    for (const auto& [name, value] : e.details())
      if (name == "cos2theta") report.diagnostics.cos2theta = Scalar(value);
    report.notes.emplace_back(e.what());
    return report;
  }

  report.theta = angle.theta;
  report.diagnostics.cos2theta = angle.cos2theta;
  const Representation<Scalar> rep{angle.theta, angle.theta};
  const Matrix2<Scalar> M = representation_matrix(angle.theta);
  const Matrix2<Scalar> A = M.transpose() * k.C * M;
  const Vector2<Scalar> z = M.transpose() * k.omega;
  const Scalar z_norm = z.norm();
  auto& diag = report.diagnostics;
  diag.z = z;
  diag.z_norm = z_norm;
  diag.az_z = (A * z).dot(z);
  diag.z_norm_cubed = z_norm * z_norm * z_norm;
  if (z_norm == Scalar(0)) {
    report.kind = EquilibriumKind::kDegenerateOmega;
    return report;
  }

  const Scalar lambda = diag.az_z / (z_norm * z_norm);
  const Scalar gap = diag.az_z - diag.z_norm_cubed;
  const Scalar band = Scalar(tol.multiplicity_rel) * diag.z_norm_cubed;
  const Vector2<Scalar> unit = z / z_norm;

  auto make = [&](const Vector2<Scalar>& x, const Vector2<Scalar>& y, Scalar eigenvalue) {
    return Equilibrium<Scalar>{x,
                               y,
                               strategy_windows(x, rep.theta),
                               strategy_windows(y, rep.tau),
                               quantum_payoff_vectors(c, rep, x, y),
                               eigenvalue};
  };

  if (abs(gap) <= band) {
    report.kind = EquilibriumKind::kMultiple;
    report.equilibria.push_back(make(unit, unit, lambda));
    report.equilibria.push_back(make(Vector2<Scalar>(-unit), unit, -lambda));
  } else if (gap < Scalar(0)) {
    report.kind = EquilibriumKind::kUnique;
    report.equilibria.push_back(make(unit, unit, lambda));
  } else {
    report.kind = EquilibriumKind::kNone;
    report.notes.emplace_back("<Az,z> exceeds |z|^3: no eigenequilibrium at the solved angle");
  }
  if (!report.equilibria.empty()) {
    report.eigenvalue = lambda;
    report.notes.emplace_back(
        "value is (g(x,y) + tr C)/4 per round with both players on the same window kind; "
        "the doubled convention reports value_doubled");
  }
  return report;
}

}  // namespace sgq

#endif  // SGQ_EQUILIBRIUM_HPP_
