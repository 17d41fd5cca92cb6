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

#ifndef SGQ_JSON_IO_HPP_
#define SGQ_JSON_IO_HPP_

// JSON encodings of lattices, payoffs, reports, and simulation runs.
// Doubles are written by nlohmann::json in shortest round-trip form.

#include <json.hpp>

#include "sgq/equilibrium.hpp"
#include "sgq/oracle.hpp"
#include "sgq/ortholattice.hpp"
#include "sgq/simulation.hpp"

namespace sgq {

using json = nlohmann::json;

// { "elements": [...], "covers": [[lower, upper], ...], "ortho": {e: e'},
//   "bottom": ..., "top": ... }
FiniteOrtholattice lattice_from_json(const json& j);
json lattice_to_json(const FiniteOrtholattice& lat);

// [c1, c2, c3, c4]
PayoffMatrix<double> payoff_from_json(const json& j);
json payoff_to_json(const PayoffMatrix<double>& c);

json windows_to_json(const WindowProbabilities<double>& w);
json report_to_json(const EquilibriumReport<double>& report);
json verdict_to_json(const SaddleVerdict& v);
json saddle_point_to_json(const SaddlePoint& s);

// {
//   "state_a": [w1, w2, w3, w4], "state_b": [w1, w2, w3, w4],
//   "payoff": [c1, c2, c3, c4], "rounds": N,
//   "seed": S,                        optional, falls back to `default_seed`
//   "window_policy": "random-even" | "alternate",   optional
//   "threads": T, "chunk_rounds": K                 optional
// }
SimulationConfig sim_config_from_json(const json& j, std::uint64_t default_seed);
json sim_config_to_json(const SimulationConfig& cfg);
json sim_result_to_json(const SimulationResult& r);

}  // namespace sgq

#endif  // SGQ_JSON_IO_HPP_
