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
#include <set>

#include "sgq/errors.hpp"
#include "sgq/simulation.hpp"

using namespace sgq;
using doctest::Approx;

namespace {

SimulationConfig base_config(std::uint64_t rounds) {
  SimulationConfig cfg;
  cfg.state_a = make_boolean_state(0.1, 0.2, 0.3, 0.4);
  cfg.state_b = make_boolean_state(0.4, 0.1, 0.2, 0.3);
  cfg.payoff = make_payoff(1.0, 9.0, 10.0, 2.0);
  cfg.rounds = rounds;
  cfg.seed = 12345;
  return cfg;
}

void check_identical(const SimulationResult& a, const SimulationResult& b) {
  CHECK(a.counts == b.counts);
  CHECK(a.empirical_payoff == b.empirical_payoff);
  CHECK(a.standard_error == b.standard_error);
  CHECK(a.tally_a.u == b.tally_a.u);
  CHECK(a.tally_b.l == b.tally_b.l);
  CHECK(a.running == b.running);
}

}  // namespace

TEST_CASE("keyed generator is a pure function of seed, stream and draw") {
  KeyedRng a(7, 3), b(7, 3), c(7, 4), d(8, 3);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 1000; ++i) {
    const auto x = a.next_u64();
    CHECK(x == b.next_u64());
    seen.insert(x);
    seen.insert(c.next_u64());
    seen.insert(d.next_u64());
  }
  CHECK(seen.size() == 3000);
  KeyedRng u(1, 1);
  for (int i = 0; i < 10000; ++i) {
    const double v = u.next_uniform();
    CHECK(v >= 0.0);
    CHECK(v < 1.0);
  }
}

TEST_CASE("quadrant reporting") {
  CHECK(outcome_for(1, Window::kSide) == Outcome::kD);
  CHECK(outcome_for(2, Window::kSide) == Outcome::kU);
  CHECK(outcome_for(3, Window::kSide) == Outcome::kD);
  CHECK(outcome_for(4, Window::kSide) == Outcome::kU);
  CHECK(outcome_for(1, Window::kBottom) == Outcome::kL);
  CHECK(outcome_for(2, Window::kBottom) == Outcome::kL);
  CHECK(outcome_for(3, Window::kBottom) == Outcome::kR);
  CHECK(outcome_for(4, Window::kBottom) == Outcome::kR);

  // A firefly pinned to one quadrant always reports the same halves.
  KeyedRng rng(1, 0);
  const auto pinned = make_boolean_state(0.0, 0.0, 1.0, 0.0);
  for (int i = 0; i < 100; ++i) {
    CHECK(observe(pinned, Window::kSide, rng) == Outcome::kD);
    CHECK(observe(pinned, Window::kBottom, rng) == Outcome::kR);
  }
}

TEST_CASE("quadrant frequencies") {
  const auto s = make_boolean_state(0.1, 0.2, 0.3, 0.4);
  const double w[4] = {0.1, 0.2, 0.3, 0.4};
  std::array<int, 4> hits{};
  KeyedRng rng(99, 0);
  const int n = 1000000;
  for (int i = 0; i < n; ++i) ++hits[sample_quadrant(s, rng) - 1];
  for (int k = 0; k < 4; ++k) {
    const double sigma = std::sqrt(n * w[k] * (1 - w[k]));
    CHECK(std::abs(hits[k] - n * w[k]) < 3 * sigma);
  }
}

TEST_CASE("payment table") {
  const auto c = make_payoff(1.0, 2.0, 3.0, 4.0);
  CHECK(payment(c, Outcome::kD, Outcome::kU) == 1.0);
  CHECK(payment(c, Outcome::kR, Outcome::kL) == 2.0);
  CHECK(payment(c, Outcome::kU, Outcome::kD) == 3.0);
  CHECK(payment(c, Outcome::kL, Outcome::kR) == 4.0);
  CHECK(payment(c, Outcome::kU, Outcome::kU) == 0.0);
  CHECK(payment(c, Outcome::kU, Outcome::kL) == 0.0);
  CHECK(payment(c, Outcome::kL, Outcome::kL) == 0.0);
}

TEST_CASE("uniform game pays a quarter per round") {
  SimulationConfig cfg;
  cfg.state_a = make_boolean_state(0.25, 0.25, 0.25, 0.25);
  cfg.state_b = cfg.state_a;
  cfg.payoff = make_payoff(1.0, 1.0, 1.0, 1.0);
  cfg.rounds = 1000000;
  cfg.seed = 5;
  const auto r = run_game(cfg);
  CHECK(r.pairing_factor == 0.25);
  CHECK(r.analytic_payoff == Approx(1.0));
  CHECK(r.predicted_payoff == Approx(0.25));
  CHECK(std::abs(r.empirical_payoff - 0.25) < 3 * r.standard_error);
}

TEST_CASE("tallies and sums are consistent") {
  const auto r = run_game(base_config(200000));
  CHECK(r.rounds == 200000);
  CHECK(r.tally_a.side + r.tally_a.bottom == r.rounds);
  CHECK(r.tally_b.side + r.tally_b.bottom == r.rounds);
  std::uint64_t total = 0;
  for (const auto& row : r.counts)
    for (auto v : row) total += v;
  CHECK(total == r.rounds);
  CHECK(r.empirical_a.sum() == 2.0);
  CHECK(r.empirical_b.sum() == 2.0);
  CHECK(r.empirical_a.u == Approx(static_cast<double>(r.tally_a.u) / r.tally_a.side));
  REQUIRE_FALSE(r.running.empty());
  CHECK(r.running.back().first == r.rounds);
  CHECK(r.running.back().second == Approx(r.empirical_payoff).epsilon(1e-12));
}

TEST_CASE("results do not depend on thread count or chunking") {
  auto cfg = base_config(300001);
  const auto one = run_game(cfg);
  cfg.threads = 5;
  check_identical(one, run_game(cfg));
  check_identical(one, run_game(cfg));

  // Chunking changes only where the running mean is sampled.
  cfg.chunk_rounds = 1000;
  const auto fine = run_game(cfg);
  CHECK(fine.counts == one.counts);
  CHECK(fine.empirical_payoff == Approx(one.empirical_payoff).epsilon(1e-12));

  cfg = base_config(300001);
  cfg.seed = 12346;
  CHECK(run_game(cfg).counts != one.counts);
}

TEST_CASE("invalid configurations are rejected") {
  auto cfg = base_config(0);
  CHECK_THROWS_AS(run_game(cfg), DomainError);
  try {
    validate(cfg);
  } catch (const DomainError& e) {
    CHECK(e.kind() == ErrorKind::kInvalidConfig);
  }
  cfg = base_config(10);
  cfg.chunk_rounds = 0;
  CHECK_THROWS_AS(validate(cfg), DomainError);
}

TEST_CASE("property: empirical payoff converges to the prediction") {
  auto cfg = base_config(1000000);
  cfg.threads = 4;
  int inside = 0;
  const int runs = 100;
  for (int i = 0; i < runs; ++i) {
    cfg.seed = 1000 + static_cast<std::uint64_t>(i);
    const auto r = run_game(cfg);
    if (std::abs(r.empirical_payoff - r.predicted_payoff) <= 4 * r.standard_error) ++inside;
  }
  CHECK(inside >= 99);
}

TEST_CASE("alternating windows double the pairing factor") {
  auto cfg = base_config(1000000);
  cfg.policy = WindowPolicy::kAlternate;
  const auto r = run_game(cfg);
  CHECK(r.pairing_factor == 0.5);
  CHECK(r.predicted_payoff == Approx(0.5 * r.analytic_payoff));
  CHECK(r.tally_a.side == 500000);
  CHECK(r.tally_b.bottom == 500000);
  CHECK(std::abs(r.empirical_payoff - r.predicted_payoff) < 4 * r.standard_error);
}
