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

#include "sgq/json_io.hpp"

#include <string>

#include "sgq/errors.hpp"

namespace sgq {
namespace {

[[noreturn]] void bad_config(const std::string& what) { throw DomainError(ErrorKind::kInvalidConfig, what); }

json vec_to_json(const Vector2<double>& v) { return json::array({v(0), v(1)}); }

template <typename T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) bad_config(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    bad_config(std::string("field '") + key + "': " + e.what());
  }
}

BooleanState<double> state_from_json(const json& j, const char* key) {
  const auto w = field<std::vector<double>>(j, key);
  if (w.size() != 4) bad_config(std::string("'") + key + "' needs four quadrant probabilities");
  return make_boolean_state(w[0], w[1], w[2], w[3]);
}

json state_to_json(const BooleanState<double>& s) { return json::array({s.w1, s.w2, s.w3, s.w4}); }

json tally_to_json(const WindowTally& t) {
  return {{"side", t.side}, {"u", t.u}, {"bottom", t.bottom}, {"l", t.l}};
}

}  // namespace

FiniteOrtholattice lattice_from_json(const json& j) {
  if (!j.is_object())
    throw DomainError(ErrorKind::kInvalidLattice, "lattice document must be a JSON object");
  try {
    auto elements = j.at("elements").get<std::vector<std::string>>();
    std::vector<FiniteOrtholattice::Cover> covers;
    for (const auto& c : j.at("covers")) {
      if (!c.is_array() || c.size() != 2)
        throw DomainError(ErrorKind::kInvalidLattice, "each cover must be a [lower, upper] pair");
      covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }
    auto ortho = j.at("ortho").get<std::map<std::string, std::string>>();
    return {std::move(elements), std::move(covers), std::move(ortho), j.at("bottom").get<std::string>(),
            j.at("top").get<std::string>()};
  } catch (const json::exception& e) {
    throw DomainError(ErrorKind::kInvalidLattice, std::string("malformed lattice document: ") + e.what());
  }
}

json lattice_to_json(const FiniteOrtholattice& lat) {
  json covers = json::array();
  for (const auto& [lo, hi] : lat.covers()) covers.push_back({lo, hi});
  json ortho = json::object();
  for (const auto& e : lat.elements()) ortho[e] = lat.ortho(e);
  return {{"elements", lat.elements()}, {"covers", covers}, {"ortho", ortho}, {"bottom", lat.bottom()},
          {"top", lat.top()}};
}

PayoffMatrix<double> payoff_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4 || !std::all_of(j.begin(), j.end(), [](const json& v) { return v.is_number(); }))
    throw DomainError(ErrorKind::kInvalidPayoff, "payoff must be a JSON array [c1, c2, c3, c4]");
  return make_payoff(j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>());
}

json payoff_to_json(const PayoffMatrix<double>& c) { return json::array({c.c1, c.c2, c.c3, c.c4}); }

json windows_to_json(const WindowProbabilities<double>& w) {
  return {{"u", w.u}, {"d", w.d}, {"l", w.l}, {"r", w.r}};
}

json report_to_json(const EquilibriumReport<double>& report) {
  json j;
  j["kind"] = std::string(to_string(report.kind));
  if (report.theta) {
    j["theta"] = *report.theta;
    j["tau"] = *report.theta;
  } else {
    j["theta"] = nullptr;
    j["tau"] = nullptr;
  }
  json eqs = json::array();
  for (const auto& e : report.equilibria) {
    eqs.push_back({{"x", vec_to_json(e.x)},
                   {"y", vec_to_json(e.y)},
                   {"probs_a", windows_to_json(e.probs_a)},
                   {"probs_b", windows_to_json(e.probs_b)},
                   {"value", e.value},
                   {"value_doubled", 2.0 * e.value},
                   {"eigenvalue", e.eigenvalue}});
  }
  j["equilibria"] = eqs;
  j["eigenvalue"] = report.eigenvalue ? json(*report.eigenvalue) : json(nullptr);
  const auto& d = report.diagnostics;
  j["diagnostics"] = {{"omega", vec_to_json(d.omega)},
                      {"z", vec_to_json(d.z)},
                      {"z_norm", d.z_norm},
                      {"az_z", d.az_z},
                      {"z_norm_cubed", d.z_norm_cubed},
                      {"delta", d.delta},
                      {"cos2theta", d.cos2theta ? json(*d.cos2theta) : json(nullptr)}};
  j["notes"] = report.notes;
  return j;
}

json verdict_to_json(const SaddleVerdict& v) {
  return {{"pass", v.pass},
          {"epsilon", v.epsilon},
          {"value", v.value},
          {"gain_a", v.gain_a},
          {"gain_b", v.gain_b},
          {"worst_deviation", v.worst_deviation()},
          {"best_angle_a", v.best_angle_a},
          {"best_angle_b", v.best_angle_b}};
}

json saddle_point_to_json(const SaddlePoint& s) {
  return {{"angle_x", s.angle_x}, {"angle_y", s.angle_y}, {"value", s.value}, {"exploitability", s.exploitability}};
}

SimulationConfig sim_config_from_json(const json& j, std::uint64_t default_seed) {
  if (!j.is_object()) bad_config("simulation config must be a JSON object");
  SimulationConfig cfg;
  cfg.state_a = state_from_json(j, "state_a");
  cfg.state_b = state_from_json(j, "state_b");
  if (!j.contains("payoff")) bad_config("missing field 'payoff'");
  cfg.payoff = payoff_from_json(j.at("payoff"));
  const auto rounds = field<long long>(j, "rounds");
  if (rounds < 1) bad_config("'rounds' must be at least 1");
  cfg.rounds = static_cast<std::uint64_t>(rounds);
  cfg.seed = j.contains("seed") ? field<std::uint64_t>(j, "seed") : default_seed;
  if (j.contains("window_policy")) {
    const auto policy = field<std::string>(j, "window_policy");
    if (policy == "random-even") cfg.policy = WindowPolicy::kRandomEven;
    else if (policy == "alternate") cfg.policy = WindowPolicy::kAlternate;
    else bad_config("unknown window_policy '" + policy + "'");
  }
  if (j.contains("threads")) cfg.threads = field<unsigned>(j, "threads");
  if (j.contains("chunk_rounds")) cfg.chunk_rounds = field<std::uint64_t>(j, "chunk_rounds");
  validate(cfg);
  return cfg;
}

json sim_config_to_json(const SimulationConfig& cfg) {
  return {{"state_a", state_to_json(cfg.state_a)},
          {"state_b", state_to_json(cfg.state_b)},
          {"payoff", payoff_to_json(cfg.payoff)},
          {"rounds", cfg.rounds},
          {"seed", cfg.seed},
          {"window_policy", cfg.policy == WindowPolicy::kRandomEven ? "random-even" : "alternate"},
          {"chunk_rounds", cfg.chunk_rounds}};
}

json sim_result_to_json(const SimulationResult& r) {
  json counts = json::array();
  for (const auto& row : r.counts) counts.push_back(row);
  json running = json::array();
  for (const auto& [done, mean] : r.running) running.push_back({done, mean});
  return {{"rounds", r.rounds},
          {"empirical_windows_a", windows_to_json(r.empirical_a)},
          {"empirical_windows_b", windows_to_json(r.empirical_b)},
          {"window_sum_a", r.empirical_a.sum()},
          {"window_sum_b", r.empirical_b.sum()},
          {"tally_a", tally_to_json(r.tally_a)},
          {"tally_b", tally_to_json(r.tally_b)},
          {"outcome_order", {"u", "l", "d", "r"}},
          {"counts", counts},
          {"empirical_payoff", r.empirical_payoff},
          {"standard_error", r.standard_error},
          {"pairing_factor", r.pairing_factor},
          {"analytic_payoff", r.analytic_payoff},
          {"predicted_payoff", r.predicted_payoff},
          {"running", running}};
}

}  // namespace sgq
