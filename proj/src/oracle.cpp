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

#include "sgq/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <utility>

namespace sgq {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct GridBest {
  double value;
  std::size_t index;
};

// Best of f(0..count-1). Ties go to the smallest index; blocks are reduced in
// index order, so the answer is independent of `threads`.
template <typename F>
GridBest best_on_grid(std::size_t count, unsigned threads, bool maximize, const F& f) {
  auto better = [maximize](double a, double b) { return maximize ? a > b : a < b; };
  auto scan = [&](std::size_t begin, std::size_t end) {
    GridBest best{f(begin), begin};
    for (std::size_t i = begin + 1; i < end; ++i) {
      const double v = f(i);
      if (better(v, best.value)) best = {v, i};
    }
    return best;
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (threads == 1) return scan(0, count);

  std::vector<GridBest> partial(threads);
  std::vector<std::thread> pool;
  const std::size_t block = (count + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t begin = std::min(count, t * block);
    const std::size_t end = std::min(count, begin + block);
    if (begin == end) {
      partial[t] = {maximize ? -INFINITY : INFINITY, count};
      continue;
    }
    pool.emplace_back([&, t, begin, end] { partial[t] = scan(begin, end); });
  }
  for (auto& th : pool) th.join();
  GridBest best = partial[0];
  for (unsigned t = 1; t < threads; ++t)
    if (partial[t].index < count && better(partial[t].value, best.value)) best = partial[t];
  return best;
}

struct CircleBest {
  double value;
  double angle;
};

// Grid scan over [0, 2 pi) followed by step-halving refinement around the
// best grid point.
template <typename F>
CircleBest best_on_circle(std::size_t grid, int rounds, unsigned threads, bool maximize, const F& f) {
  const double h = kTwoPi / static_cast<double>(grid);
  const GridBest g = best_on_grid(grid, threads, maximize,
                                  [&](std::size_t i) { return f(h * static_cast<double>(i)); });
  CircleBest best{g.value, h * static_cast<double>(g.index)};
  double step = h;
  for (int r = 0; r < rounds; ++r) {
    step /= 2;
    const double left = best.angle - step;
    const double right = best.angle + step;
    const double fl = f(left);
    const double fr = f(right);
    const bool take_left = maximize ? fl > best.value && fl >= fr : fl < best.value && fl <= fr;
    const bool take_right = !take_left && (maximize ? fr > best.value : fr < best.value);
    if (take_left) best = {fl, left};
    if (take_right) best = {fr, right};
  }
  return best;
}

double payoff_at(const PayoffMatrix<double>& c, const Representation<double>& rep, const Vector2<double>& x,
                 const Vector2<double>& y) {
  return quantum_payoff_probabilities(c, strategy_windows(x, rep.theta), strategy_windows(y, rep.tau));
}

double wrap_angle(double a) {
  double w = std::fmod(a, kTwoPi);
  if (w < 0) w += kTwoPi;
  return w;
}

}  // namespace

double angle_distance(double a, double b) {
  const double d = wrap_angle(a - b);
  return std::min(d, kTwoPi - d);
}

SaddleVerdict saddle_oracle(const PayoffMatrix<double>& c, const Representation<double>& rep,
                            const Vector2<double>& x, const Vector2<double>& y, const OracleOptions& options) {
  if (options.grid < 256) throw std::invalid_argument("saddle_oracle: grid must be at least 256");
  SaddleVerdict v;
  v.epsilon = options.eps_rel * c.total();
  v.value = payoff_at(c, rep, x, y);

  const CircleBest a = best_on_circle(options.grid, options.refinements, options.threads, true,
                                      [&](double phi) { return payoff_at(c, rep, unit_vector(phi), y); });
  const CircleBest b = best_on_circle(options.grid, options.refinements, options.threads, false,
                                      [&](double phi) { return payoff_at(c, rep, x, unit_vector(phi)); });
  v.gain_a = a.value - v.value;
  v.gain_b = v.value - b.value;
  v.best_angle_a = wrap_angle(a.angle);
  v.best_angle_b = wrap_angle(b.angle);
  v.pass = v.gain_a <= v.epsilon && v.gain_b <= v.epsilon;
  return v;
}

double exploitability(const PayoffMatrix<double>& c, const Representation<double>& rep, double angle_x,
                      double angle_y) {
  constexpr std::size_t kGrid = 256;
  constexpr int kRounds = 48;
  const Vector2<double> x = unit_vector(angle_x);
  const Vector2<double> y = unit_vector(angle_y);
  const double best_a =
      best_on_circle(kGrid, kRounds, 1, true, [&](double phi) { return payoff_at(c, rep, unit_vector(phi), y); })
          .value;
  const double best_b =
      best_on_circle(kGrid, kRounds, 1, false, [&](double phi) { return payoff_at(c, rep, x, unit_vector(phi)); })
          .value;
  return best_a - best_b;
}

std::vector<SaddlePoint> saddle_scan(const PayoffMatrix<double>& c, const Representation<double>& rep,
                                     const ScanOptions& options) {
  const std::size_t n = options.grid;
  if (n < 16) throw std::invalid_argument("saddle_scan: grid must be at least 16");
  const double h = kTwoPi / static_cast<double>(n);

  std::vector<Vector2<double>> dirs(n);
  for (std::size_t i = 0; i < n; ++i) dirs[i] = unit_vector(h * static_cast<double>(i));

  // H[i * n + j] = H(x_i, y_j), filled row-blocks in parallel.
  std::vector<double> table(n * n);
  {
    const unsigned threads = std::max(1u, options.threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < n; i += threads)
          for (std::size_t j = 0; j < n; ++j) table[i * n + j] = payoff_at(c, rep, dirs[i], dirs[j]);
      });
    }
    for (auto& th : pool) th.join();
  }
  std::vector<double> col_max(n, -INFINITY), row_min(n, INFINITY);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double v = table[i * n + j];
      col_max[j] = std::max(col_max[j], v);
      row_min[i] = std::min(row_min[i], v);
    }
  auto grid_e = [&](std::size_t i, std::size_t j) { return col_max[j] - row_min[i]; };

  const double threshold = 2.0 * c.total() * h;
  std::vector<std::tuple<double, std::size_t, std::size_t>> candidates;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double e = grid_e(i, j);
      if (e > threshold) continue;
      bool local_min = true;
      for (int di = -1; di <= 1 && local_min; ++di)
        for (int dj = -1; dj <= 1 && local_min; ++dj) {
          if (di == 0 && dj == 0) continue;
          const std::size_t ii = (i + n + di) % n;
          const std::size_t jj = (j + n + dj) % n;
          if (grid_e(ii, jj) < e) local_min = false;
        }
      if (local_min) candidates.emplace_back(e, i, j);
    }
  std::sort(candidates.begin(), candidates.end());
  constexpr std::size_t kMaxCandidates = 64;
  if (candidates.size() > kMaxCandidates) candidates.resize(kMaxCandidates);

  const double accept = options.accept_rel * c.total();
  std::vector<SaddlePoint> found;
  for (const auto& [e0, i0, j0] : candidates) {
    double ax = h * static_cast<double>(i0);
    double ay = h * static_cast<double>(j0);
    double e = exploitability(c, rep, ax, ay);
    double step = h;
    for (int iter = 0; iter < 4000 && step > 1e-11; ++iter) {
      double best_e = e, best_x = ax, best_y = ay;
      for (int di = -1; di <= 1; ++di)
        for (int dj = -1; dj <= 1; ++dj) {
          if (di == 0 && dj == 0) continue;
          const double tx = ax + di * step, ty = ay + dj * step;
          const double te = exploitability(c, rep, tx, ty);
          if (te < best_e) best_e = te, best_x = tx, best_y = ty;
        }
      if (best_e < e) {
        e = best_e, ax = best_x, ay = best_y;
      } else {
        step /= 2;
      }
    }
    if (e > accept) continue;
    ax = wrap_angle(ax);
    ay = wrap_angle(ay);
    const bool duplicate = std::any_of(found.begin(), found.end(), [&](const SaddlePoint& s) {
      return angle_distance(s.angle_x, ax) < 1e-6 && angle_distance(s.angle_y, ay) < 1e-6;
    });
    if (duplicate) continue;
    found.push_back({ax, ay, payoff_at(c, rep, unit_vector(ax), unit_vector(ay)), e});
  }
  std::sort(found.begin(), found.end(), [](const SaddlePoint& a, const SaddlePoint& b) {
    return std::tie(a.angle_x, a.angle_y) < std::tie(b.angle_x, b.angle_y);
  });
  return found;
}

ClassicalSaddle classical_saddle_oracle(const PayoffMatrix<double>& c, std::size_t grid) {
  if (grid < 101) throw std::invalid_argument("classical_saddle_oracle: grid must be at least 101");
  const double step = 1.0 / static_cast<double>(grid - 1);
  auto prob = [&](std::size_t i) { return i == grid - 1 ? 1.0 : step * static_cast<double>(i); };

  // Subgame payoff a (1 - p) q + b p (1 - q): A picks p, B picks q.
  struct Sub {
    double p, q, lower, upper;
  };
  auto solve = [&](double a, double b) {
    auto payoff = [&](double p, double q) { return a * (1 - p) * q + b * p * (1 - q); };
    Sub s{0, 0, -INFINITY, INFINITY};
    for (std::size_t i = 0; i < grid; ++i) {
      double worst = INFINITY;
      for (std::size_t j = 0; j < grid; ++j) worst = std::min(worst, payoff(prob(i), prob(j)));
      if (worst > s.lower) s.lower = worst, s.p = prob(i);
    }
    for (std::size_t j = 0; j < grid; ++j) {
      double worst = -INFINITY;
      for (std::size_t i = 0; i < grid; ++i) worst = std::max(worst, payoff(prob(i), prob(j)));
      if (worst < s.upper) s.upper = worst, s.q = prob(j);
    }
    return s;
  };
  // Outcome pairs c1 p3 q1 + c3 p1 q3 and c2 p4 q2 + c4 p2 q4.
  const Sub first = solve(c.c1, c.c3);
  const Sub second = solve(c.c2, c.c4);
  return {first.p, second.p, first.q, second.q, first.lower + second.lower, first.upper + second.upper};
}

}  // namespace sgq
