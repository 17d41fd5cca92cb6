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

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sgq/equilibrium.hpp"
#include "sgq/oracle.hpp"

using namespace sgq;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;
const Representation<double> kDiagonal{kPi / 4, kPi / 4};

double strategy_angle(const Vector2<double>& v) { return std::atan2(v[1], v[0]); }

}  // namespace

TEST_CASE("oracle certifies solver output") {
  for (const auto& c : {make_payoff(1.0, 9.0, 10.0, 2.0), make_payoff(1.0, 2.0, 9.0, 8.0),
                        make_payoff(1.0, 2.0, 99.0, 98.0)}) {
    const auto r = solve_eigenequilibrium(c);
    REQUIRE_FALSE(r.equilibria.empty());
    for (const auto& e : r.equilibria) {
      const auto v = saddle_oracle(c, {*r.theta, *r.theta}, e.x, e.y);
      CHECK(v.pass);
      CHECK(v.worst_deviation() <= v.epsilon);
      CHECK(v.value == Approx(e.value).epsilon(1e-12));
    }
  }
}

TEST_CASE("oracle rejects non-saddles") {
  const auto c = make_payoff(1.0, 9.0, 10.0, 2.0);
  const auto r = solve_eigenequilibrium(c);
  const auto& e = r.equilibria[0];

  // Right vectors, wrong representation.
  const auto wrong_rep = saddle_oracle(c, {kPi / 3, kPi / 3}, e.x, e.y);
  CHECK_FALSE(wrong_rep.pass);

  // Rotated strategy for A: B's best response changes nothing, A gains.
  const auto off = saddle_oracle(c, kDiagonal, unit_vector(strategy_angle(e.x) + 0.2), e.y);
  CHECK_FALSE(off.pass);
  CHECK(off.gain_a > 1e-3);
  CHECK(angle_distance(off.best_angle_a, strategy_angle(e.x)) < 2 * kPi / 4096);
}

TEST_CASE("oracle is deterministic across thread counts") {
  const auto c = make_payoff(3.0, 7.0, 11.0, 2.0);
  const Representation<double> rep{0.7, 0.9};
  const auto x = unit_vector(0.4);
  const auto y = unit_vector(2.1);
  OracleOptions one;
  OracleOptions many;
  many.threads = 7;
  const auto a = saddle_oracle(c, rep, x, y, one);
  const auto b = saddle_oracle(c, rep, x, y, many);
  CHECK(a.gain_a == b.gain_a);
  CHECK(a.gain_b == b.gain_b);
  CHECK(a.best_angle_a == b.best_angle_a);
  CHECK(a.best_angle_b == b.best_angle_b);

  ScanOptions s1;
  s1.grid = 256;
  ScanOptions s4 = s1;
  s4.threads = 4;
  const auto p = saddle_scan(make_payoff(1.0, 2.0, 9.0, 8.0), kDiagonal, s1);
  const auto q = saddle_scan(make_payoff(1.0, 2.0, 9.0, 8.0), kDiagonal, s4);
  REQUIRE(p.size() == q.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    CHECK(p[i].angle_x == q[i].angle_x);
    CHECK(p[i].angle_y == q[i].angle_y);
  }
}

TEST_CASE("grid scan finds exactly the predicted saddles") {
  {
    const auto c = make_payoff(1.0, 9.0, 10.0, 2.0);
    const auto e = solve_eigenequilibrium(c).equilibria[0];
    const auto pts = saddle_scan(c, kDiagonal);
    REQUIRE(pts.size() == 1);
    CHECK(angle_distance(pts[0].angle_x, strategy_angle(e.x)) < 1e-3);
    CHECK(angle_distance(pts[0].angle_y, strategy_angle(e.y)) < 1e-3);
    CHECK(pts[0].value == Approx(2.75).epsilon(1e-9));
  }
  {
    // On the multiplicity boundary the solver's two pairs (z, z) and (-z, z)
    // are both saddles of the same value.
    const auto c = make_payoff(1.0, 2.0, 9.0, 8.0);
    const auto r = solve_eigenequilibrium(c);
    const auto pts = saddle_scan(c, kDiagonal);
    REQUIRE(pts.size() >= 2);
    for (const auto& e : r.equilibria) {
      bool found = false;
      for (const auto& p : pts)
        found = found || (angle_distance(p.angle_x, strategy_angle(e.x)) < 1e-3 &&
                          angle_distance(p.angle_y, strategy_angle(e.y)) < 1e-3);
      CHECK(found);
    }
    for (const auto& p : pts) CHECK(p.value == Approx(2.5).epsilon(1e-6));
  }
}

TEST_CASE("oracle arbitrates the near-diagonal example") {
  // w_l = 0.622 is off the ellipse for w_u = 0.857; the direct search
  // recovers 0.8499.
  const auto c = make_payoff(1.0, 2.0, 99.0, 98.0);
  const auto pts = saddle_scan(c, kDiagonal);
  REQUIRE(pts.size() == 1);
  const auto w = strategy_windows(unit_vector(pts[0].angle_x), kPi / 4);
  CHECK(w.u == Approx(0.8572).epsilon(1e-3));
  CHECK(w.l == Approx(0.8499).epsilon(1e-3));
  CHECK(std::abs(w.l - 0.622) > 0.2);
  CHECK(pts[0].value == Approx(25.0).epsilon(1e-7));
}

TEST_CASE("exploitability vanishes only at saddles") {
  const auto c = make_payoff(1.0, 9.0, 10.0, 2.0);
  const auto e = solve_eigenequilibrium(c).equilibria[0];
  CHECK(exploitability(c, kDiagonal, strategy_angle(e.x), strategy_angle(e.y)) < 1e-9 * c.total());
  CHECK(exploitability(c, kDiagonal, 0.0, 0.0) > 0.1);
}

TEST_CASE("classical oracle matches the closed form") {
  for (const auto& c : {make_payoff(1.0, 9.0, 10.0, 2.0), make_payoff(1.0, 2.0, 9.0, 8.0),
                        make_payoff(3.0, 5.0, 7.0, 11.0), make_payoff(0.5, 40.0, 2.0, 1.0)}) {
    const double h = classical_value(c);
    // Half a grid step off the optimum costs at most max(a, b) per subgame.
    const double bound = 0.5 * (std::max(c.c1, c.c3) + std::max(c.c2, c.c4));
    for (std::size_t grid : {101, 401, 1601}) {
      const auto s = classical_saddle_oracle(c, grid);
      const double step = 1.0 / static_cast<double>(grid - 1);
      CHECK(s.value <= h + 1e-12);
      CHECK(s.value_upper >= h - 1e-12);
      CHECK(h - s.value <= bound * step + 1e-12);
      CHECK(s.value_upper - h <= bound * step + 1e-12);
      CHECK(std::abs(s.p1 - c.c1 / (c.c1 + c.c3)) <= step);
      CHECK(std::abs(s.q1 - c.c3 / (c.c1 + c.c3)) <= step);
      CHECK(std::abs(s.p2 - c.c2 / (c.c2 + c.c4)) <= step);
      CHECK(std::abs(s.q2 - c.c4 / (c.c2 + c.c4)) <= step);
    }
  }
  const auto c = make_payoff(1.0, 9.0, 10.0, 2.0);
  CHECK(classical_value(c) == Approx(28.0 / 11.0));
  CHECK(classical_value(c) < 2.75);
}

TEST_CASE("oracle argument validation") {
  const auto c = make_payoff(1.0, 2.0, 3.0, 4.0);
  OracleOptions o;
  o.grid = 100;
  CHECK_THROWS_AS(saddle_oracle(c, kDiagonal, unit_vector(0.0), unit_vector(0.0), o), std::invalid_argument);
  CHECK_THROWS_AS(classical_saddle_oracle(c, 50), std::invalid_argument);
  CHECK(angle_distance(0.1, 2 * kPi - 0.1) == Approx(0.2));
  CHECK(angle_distance(0.0, kPi) == Approx(kPi));
}
