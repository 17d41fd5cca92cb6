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

#ifndef SGQ_SIMULATION_HPP_
#define SGQ_SIMULATION_HPP_

// Monte Carlo model of two fireflies observed through box windows.
//
// A trained firefly is a quadrant distribution. Each round both observers
// pick a window, each firefly lands in a quadrant, and the pair of reported
// halves settles the payment. Randomness is counter-based: every round owns
// an independent stream keyed by (seed, round), so any chunking of the rounds
// over threads reproduces the sequential result bit for bit.

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "sgq/measures.hpp"
#include "sgq/payoff.hpp"

namespace sgq {

enum class Window { kBottom, kSide };

// Ordered as the payoff table rows: 1 = u, 2 = l, 3 = d, 4 = r.
enum class Outcome { kU = 0, kL = 1, kD = 2, kR = 3 };

enum class WindowPolicy {
  kRandomEven,  // each observer picks either window with probability 1/2
  kAlternate,   // even rounds both look sideways, odd rounds both at the bottom
};

// SplitMix64-style keyed generator; draw k of stream s is a pure function
// of (seed, s, k).
class KeyedRng {
 public:
  KeyedRng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();
  // Uniform on [0, 1) with 53 random bits.
  double next_uniform();

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// 1-based quadrant drawn from the distribution.
int sample_quadrant(const BooleanState<double>& state, KeyedRng& rng);
Outcome outcome_for(int quadrant, Window window);
Outcome observe(const BooleanState<double>& state, Window window, KeyedRng& rng);

// Payment from B to A for an outcome pair; 0 off the four live cells.
double payment(const PayoffMatrix<double>& c, Outcome a, Outcome b);

struct SimulationConfig {
  BooleanState<double> state_a;
  BooleanState<double> state_b;
  PayoffMatrix<double> payoff;
  std::uint64_t rounds = 0;
  std::uint64_t seed = 0;
  WindowPolicy policy = WindowPolicy::kRandomEven;
  unsigned threads = 1;
  std::uint64_t chunk_rounds = 1u << 16;
};

struct WindowTally {
  std::uint64_t side = 0, u = 0;    // side-window looks and u sightings
  std::uint64_t bottom = 0, l = 0;  // bottom-window looks and l sightings
};

struct SimulationResult {
  std::uint64_t rounds = 0;
  WindowTally tally_a, tally_b;
  WindowProbabilities<double> empirical_a{}, empirical_b{};
  // counts[a][b]: rounds with A outcome a and B outcome b (payoff-table order).
  std::array<std::array<std::uint64_t, 4>, 4> counts{};
  double empirical_payoff = 0;  // mean payment per round
  double standard_error = 0;
  double pairing_factor = 0;    // share of rounds in which a given live cell can fire
  double analytic_payoff = 0;   // payoff from the exact window probabilities
  double predicted_payoff = 0;  // expected payment per round under the policy
  // (rounds so far, running mean payment) after each chunk.
  std::vector<std::pair<std::uint64_t, double>> running;
};

// Throws DomainError(kInvalidConfig) for rounds == 0 or chunk_rounds == 0.
void validate(const SimulationConfig& config);

SimulationResult run_game(const SimulationConfig& config);

}  // namespace sgq

#endif  // SGQ_SIMULATION_HPP_
