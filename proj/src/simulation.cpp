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

#include "sgq/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "sgq/errors.hpp"

namespace sgq {
namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct ChunkTally {
  WindowTally a, b;
  std::array<std::array<std::uint64_t, 4>, 4> counts{};
};

void record(WindowTally& t, Window w, Outcome o) {
  if (w == Window::kSide) {
    ++t.side;
    if (o == Outcome::kU) ++t.u;
  } else {
    ++t.bottom;
    if (o == Outcome::kL) ++t.l;
  }
}

ChunkTally run_chunk(const SimulationConfig& cfg, std::uint64_t begin, std::uint64_t end) {
  ChunkTally tally;
  for (std::uint64_t round = begin; round < end; ++round) {
    KeyedRng rng(cfg.seed, round);
    Window wa, wb;
    if (cfg.policy == WindowPolicy::kRandomEven) {
      wa = rng.next_uniform() < 0.5 ? Window::kSide : Window::kBottom;
      wb = rng.next_uniform() < 0.5 ? Window::kSide : Window::kBottom;
    } else {
      wa = wb = (round % 2 == 0) ? Window::kSide : Window::kBottom;
    }
    const Outcome oa = observe(cfg.state_a, wa, rng);
    const Outcome ob = observe(cfg.state_b, wb, rng);
    record(tally.a, wa, oa);
    record(tally.b, wb, ob);
    ++tally.counts[static_cast<int>(oa)][static_cast<int>(ob)];
  }
  return tally;
}

void accumulate(WindowTally& into, const WindowTally& from) {
  into.side += from.side;
  into.u += from.u;
  into.bottom += from.bottom;
  into.l += from.l;
}

WindowProbabilities<double> frequencies(const WindowTally& t) {
  WindowProbabilities<double> w{};
  w.u = t.side ? static_cast<double>(t.u) / static_cast<double>(t.side) : NAN;
  w.l = t.bottom ? static_cast<double>(t.l) / static_cast<double>(t.bottom) : NAN;
  // Complements by subtraction: fl(x + fl(1 - x)) == 1 for x in [0, 1].
  w.d = 1.0 - w.u;
  w.r = 1.0 - w.l;
  return w;
}

}  // namespace

KeyedRng::KeyedRng(std::uint64_t seed, std::uint64_t stream)
    : key_(mix64(seed ^ mix64(stream * kGolden + 0x2545f4914f6cdd1dULL))) {}

std::uint64_t KeyedRng::next_u64() { return mix64(key_ + ++counter_ * kGolden); }

double KeyedRng::next_uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

int sample_quadrant(const BooleanState<double>& s, KeyedRng& rng) {
  const double u = rng.next_uniform();
  const double w[4] = {s.w1, s.w2, s.w3, s.w4};
  double acc = 0;
  int last_positive = 0;
  for (int q = 0; q < 4; ++q) {
    if (w[q] > 0) last_positive = q;
    acc += w[q];
    if (u < acc && w[q] > 0) return q + 1;
  }
  return last_positive + 1;
}

Outcome outcome_for(int quadrant, Window window) {
  if (window == Window::kBottom) return quadrant <= 2 ? Outcome::kL : Outcome::kR;
  return (quadrant % 2 == 1) ? Outcome::kD : Outcome::kU;
}

Outcome observe(const BooleanState<double>& state, Window window, KeyedRng& rng) {
  return outcome_for(sample_quadrant(state, rng), window);
}

double payment(const PayoffMatrix<double>& c, Outcome a, Outcome b) {
  if (a == Outcome::kU && b == Outcome::kD) return c.c3;
  if (a == Outcome::kD && b == Outcome::kU) return c.c1;
  if (a == Outcome::kL && b == Outcome::kR) return c.c4;
  if (a == Outcome::kR && b == Outcome::kL) return c.c2;
  return 0.0;
}

void validate(const SimulationConfig& config) {
  if (config.rounds == 0) throw DomainError(ErrorKind::kInvalidConfig, "simulation needs at least one round");
  if (config.chunk_rounds == 0) throw DomainError(ErrorKind::kInvalidConfig, "chunk_rounds must be positive");
  // Re-validate the distributions and payoff in case they were built by hand.
  for (const auto* s : {&config.state_a, &config.state_b}) make_boolean_state(s->w1, s->w2, s->w3, s->w4);
  make_payoff(config.payoff.c1, config.payoff.c2, config.payoff.c3, config.payoff.c4);
}

SimulationResult run_game(const SimulationConfig& cfg) {
  validate(cfg);
  const std::uint64_t chunk = cfg.chunk_rounds;
  const std::uint64_t n_chunks = (cfg.rounds + chunk - 1) / chunk;
  std::vector<ChunkTally> chunks(n_chunks);

  const unsigned threads =
      static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(cfg.threads, n_chunks)));
  auto worker = [&](unsigned t) {
    for (std::uint64_t k = t; k < n_chunks; k += threads)
      chunks[k] = run_chunk(cfg, k * chunk, std::min(cfg.rounds, (k + 1) * chunk));
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }

  SimulationResult res;
  res.rounds = cfg.rounds;
  double pay[4][4];
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) pay[a][b] = payment(cfg.payoff, static_cast<Outcome>(a), static_cast<Outcome>(b));

  std::uint64_t done = 0;
  for (const ChunkTally& t : chunks) {
    accumulate(res.tally_a, t.a);
    accumulate(res.tally_b, t.b);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) res.counts[a][b] += t.counts[a][b];
    done += [&] {
      std::uint64_t s = 0;
      for (const auto& row : t.counts)
        for (auto v : row) s += v;
      return s;
    }();
    double total = 0;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) total += pay[a][b] * static_cast<double>(res.counts[a][b]);
    res.running.emplace_back(done, total / static_cast<double>(done));
  }

  double sum = 0, sum_sq = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const double k = static_cast<double>(res.counts[a][b]);
      sum += pay[a][b] * k;
      sum_sq += pay[a][b] * pay[a][b] * k;
    }
  const double n = static_cast<double>(cfg.rounds);
  res.empirical_payoff = sum / n;
  if (cfg.rounds > 1) {
    const double var = std::max(0.0, (sum_sq - n * res.empirical_payoff * res.empirical_payoff) / (n - 1));
    res.standard_error = std::sqrt(var / n);
  }
  res.empirical_a = frequencies(res.tally_a);
  res.empirical_b = frequencies(res.tally_b);

  const auto wa = boolean_to_windows(cfg.state_a);
  const auto wb = boolean_to_windows(cfg.state_b);
  const auto& c = cfg.payoff;
  const double side_part = c.c3 * wa.u * wb.d + c.c1 * wa.d * wb.u;
  const double bottom_part = c.c4 * wa.l * wb.r + c.c2 * wa.r * wb.l;
  res.analytic_payoff = quantum_payoff_probabilities(c, wa, wb);
  if (cfg.policy == WindowPolicy::kRandomEven) {
    res.pairing_factor = 0.25;
    res.predicted_payoff = 0.25 * (side_part + bottom_part);
  } else {
    res.pairing_factor = 0.5;
    const double side_rounds = static_cast<double>((cfg.rounds + 1) / 2);
    const double bottom_rounds = static_cast<double>(cfg.rounds / 2);
    res.predicted_payoff = (side_rounds * side_part + bottom_rounds * bottom_part) / n;
  }
  return res;
}

}  // namespace sgq
