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

#ifndef SGQ_ORACLE_HPP_
#define SGQ_ORACLE_HPP_

// Brute-force verification of equilibrium claims. Payoffs here are always
// evaluated from window probabilities, never through the matrix form used by
// the closed-form solver. Grid scans may run on several threads; reductions
// break ties on the smallest grid index, so results never depend on the
// thread count.

#include <cstddef>
#include <vector>

#include "sgq/equilibrium.hpp"
#include "sgq/payoff.hpp"

namespace sgq {

struct OracleOptions {
  std::size_t grid = 4096;
  int refinements = 3;
  unsigned threads = 1;
  double eps_rel = 1e-9;  // epsilon = eps_rel * (c1 + c2 + c3 + c4)
};

struct SaddleVerdict {
  bool pass = false;
  double epsilon = 0;
  double value = 0;          // H(x, y)
  double gain_a = 0;         // max_x' H(x', y) - H(x, y)
  double gain_b = 0;         // H(x, y) - min_y' H(x, y')
  double best_angle_a = 0;   // maximizing deviation of A
  double best_angle_b = 0;   // minimizing deviation of B
  double worst_deviation() const { return gain_a > gain_b ? gain_a : gain_b; }
};

// A maximizes, B minimizes. Scans deviations over a uniform angle grid on
// [0, 2 pi) and refines locally around the best deviation with step-halving
// rounds. Throws std::invalid_argument for grid < 256.
SaddleVerdict saddle_oracle(const PayoffMatrix<double>& c, const Representation<double>& rep,
                            const Vector2<double>& x, const Vector2<double>& y,
                            const OracleOptions& options = {});

struct ScanOptions {
  std::size_t grid = 512;
  unsigned threads = 1;
  double accept_rel = 1e-7;  // refined exploitability bound, relative to sum c
};

struct SaddlePoint {
  double angle_x = 0;
  double angle_y = 0;
  double value = 0;
  double exploitability = 0;  // max_x' H(x', y) - min_y' H(x, y')
};

// Searches the whole strategy torus for saddle points: exploitability is
// tabulated on a grid x grid lattice, every local minimum below a
// discretization threshold is polished by pattern search, and the polished
// points whose exploitability falls below accept_rel * sum(c) are returned,
// deduplicated, ordered by (angle_x, angle_y).
std::vector<SaddlePoint> saddle_scan(const PayoffMatrix<double>& c, const Representation<double>& rep,
                                     const ScanOptions& options = {});

// Exploitability of a strategy pair, computed by fine one-dimensional scans.
double exploitability(const PayoffMatrix<double>& c, const Representation<double>& rep, double angle_x,
                      double angle_y);

struct ClassicalSaddle {
  double p1 = 0, p2 = 0, q1 = 0, q2 = 0;
  double value = 0;        // max_p min_q on the grid
  double value_upper = 0;  // min_q max_p on the grid
};

// Saddle of the classical game with unconstrained probabilities on the
// uniform grid {0, 1/(grid-1), ..., 1}. The payoff splits into a (p1, q1)
// game and a (p2, q2) game, and each is scanned exhaustively.
// Throws std::invalid_argument for grid < 101.
ClassicalSaddle classical_saddle_oracle(const PayoffMatrix<double>& c, std::size_t grid = 1601);

// Circular distance between two angles, in [0, pi].
double angle_distance(double a, double b);

}  // namespace sgq

#endif  // SGQ_ORACLE_HPP_
