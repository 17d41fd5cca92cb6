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

#include "sgq/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "sgq/equilibrium.hpp"
#include "sgq/errors.hpp"
#include "sgq/json_io.hpp"
#include "sgq/measures.hpp"
#include "sgq/oracle.hpp"
#include "sgq/ortholattice.hpp"
#include "sgq/payoff.hpp"
#include "sgq/simulation.hpp"

namespace sgq::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { kDefault, kJson, kCsv };

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& token, const std::string& what) {
  double v = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last) throw UsageError("cannot parse " + what + " from '" + token + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream is(s);
  while (std::getline(is, part, sep)) parts.push_back(part);
  return parts;
}

std::vector<double> parse_list(const std::string& s, std::size_t expected, const std::string& what) {
  std::vector<double> v;
  for (const auto& token : split(s, ',')) v.push_back(parse_double(token, what));
  if (v.size() != expected)
    throw UsageError(what + " needs " + std::to_string(expected) + " comma-separated values");
  return v;
}

PayoffMatrix<double> parse_payoff(const std::string& s) {
  const auto c = parse_list(s, 4, "payoff");
  return make_payoff(c[0], c[1], c[2], c[3]);
}

Tolerances parse_tolerances(const std::string& s) {
  Tolerances tol;
  if (s.empty()) return tol;
  for (const auto& item : split(s, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("tolerance override must be key=value: '" + item + "'");
    const std::string key = item.substr(0, eq);
    const double value = parse_double(item.substr(eq + 1), "tolerance '" + key + "'");
    if (!(value >= 0)) throw UsageError("tolerance '" + key + "' must be non-negative");
    if (key == "multiplicity_rel") tol.multiplicity_rel = value;
    else if (key == "eigen_residual") tol.eigen_residual = value;
    else if (key == "degenerate_delta_rel") tol.degenerate_delta_rel = value;
    else if (key == "degenerate_angle") tol.degenerate_angle = value;
    else if (key == "oracle_eps_rel") tol.oracle_eps_rel = value;
    else throw UsageError("unknown tolerance '" + key + "'");
  }
  return tol;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json error_object(ErrorKind kind, const std::string& message, const DomainError::Details& details = {}) {
  json d = json::object();
  for (const auto& [k, v] : details) d[k] = v;
  return {{"error", {{"kind", std::string(to_string(kind))}, {"message", message}, {"details", d}}}};
}

// lattice check -------------------------------------------------------------

int lattice_check(const std::string& target, Format format, std::ostream& out) {
  if (format == Format::kCsv) throw UsageError("lattice check has no CSV output");
  FiniteOrtholattice lat = [&] {
    if (target == "firefly") return firefly_lattice();
    if (target == "boolean4") return boolean_lattice(4);
    return lattice_from_json(read_json_file(target));
  }();
  json j;
  j["lattice"] = target;
  j["size"] = lat.size();
  const auto witness = find_distributivity_violation(lat);
  j["distributive"] = !witness.has_value();
  j["distributivity_witness"] = witness ? json(*witness) : json(nullptr);
  const auto om = check_orthomodular(lat);
  j["orthomodular"] = om.holds;
  j["orthomodular_counterexample"] =
      om.counterexample ? json::array({om.counterexample->first, om.counterexample->second}) : json(nullptr);
  json laws = json::object();
  bool all = true;
  for (const auto& law : check_lattice_laws(lat)) {
    laws[law.name] = {{"holds", law.holds}, {"counterexample", law.counterexample}};
    all = all && law.holds;
  }
  j["laws"] = laws;
  j["all_laws_hold"] = all;
  if (target == "firefly") {
    const auto boolean = boolean_lattice(4);
    const auto map = boolean_embedding(lat);
    const auto check = check_embedding(lat, boolean, map);
    j["boolean_embedding"] = {{"map", map},
                              {"injective", check.injective},
                              {"order_preserving", check.order_preserving},
                              {"ortho_preserving", check.ortho_preserving}};
  }
  out << dump(j);
  return kExitOk;
}

// measures ------------------------------------------------------------------

int measures_ellipse(double wu, double wl, double theta, std::ostream& out) {
  for (double w : {wu, wl})
    if (!(w >= -kProbabilityTol && w <= 1 + kProbabilityTol))
      throw DomainError(ErrorKind::kInvalidProbability, "window probability outside [0, 1]");
  const double residual = ellipse_residual(wu, wl, theta);
  json j{{"w_u", wu},
         {"w_l", wl},
         {"theta", theta},
         {"residual", residual},
         {"on_ellipse", std::abs(residual) <= kProbabilityTol}};
  out << dump(j);
  return kExitOk;
}

int measures_embed(double wl, double wd, std::optional<double> free, std::ostream& out) {
  const auto w = make_windows(1.0 - wd, wl);
  const auto [lo, hi] = free_parameter_interval(w);
  const double chosen = free.value_or(0.5 * (lo + hi));
  const auto state = windows_to_boolean(w, chosen);
  const auto back = boolean_to_windows(state);
  json j{{"windows", windows_to_json(w)},
         {"free_interval", {lo, hi}},
         {"free", chosen},
         {"free_defaulted", !free.has_value()},
         {"state", {state.w1, state.w2, state.w3, state.w4}},
         {"roundtrip_windows", windows_to_json(back)},
         {"window_sum", back.sum()}};
  out << dump(j);
  return kExitOk;
}

// payoff --------------------------------------------------------------------

WindowProbabilities<double> parse_p_tuple(const std::string& s, const std::string& what) {
  // p1..p4 = (w_u, w_l, w_d, w_r)
  const auto p = parse_list(s, 4, what);
  for (double v : p)
    if (!(v >= -kProbabilityTol && v <= 1 + kProbabilityTol))
      throw DomainError(ErrorKind::kInvalidProbability, what + ": probability outside [0, 1]");
  if (std::abs(p[0] + p[2] - 1) > kProbabilityTol || std::abs(p[1] + p[3] - 1) > kProbabilityTol)
    throw DomainError(ErrorKind::kInvalidProbability, what + ": p1 + p3 and p2 + p4 must equal 1");
  return {p[0], p[2], p[1], p[3]};
}

struct PayoffEvalArgs {
  std::string payoff;
  std::string p, q;
  std::optional<double> x_angle, y_angle, theta, tau;
};

int payoff_eval(const PayoffEvalArgs& a, std::ostream& out) {
  const auto c = parse_payoff(a.payoff);
  json j{{"payoff", payoff_to_json(c)}};
  const bool prob_mode = !a.p.empty() || !a.q.empty();
  const bool angle_mode = a.x_angle || a.y_angle || a.theta || a.tau;
  if (prob_mode == angle_mode)
    throw UsageError("payoff eval takes either --p/--q or --x-angle/--y-angle/--theta/--tau");
  if (prob_mode) {
    if (a.p.empty() || a.q.empty()) throw UsageError("both --p and --q are required");
    const auto wa = parse_p_tuple(a.p, "--p");
    const auto wb = parse_p_tuple(a.q, "--q");
    j["probs_a"] = windows_to_json(wa);
    j["probs_b"] = windows_to_json(wb);
    j["value"] = quantum_payoff_probabilities(c, wa, wb);
  } else {
    if (!(a.x_angle && a.y_angle && a.theta && a.tau))
      throw UsageError("angle mode needs --x-angle, --y-angle, --theta and --tau");
    const auto rep = make_representation(*a.theta, *a.tau);
    const Vector2<double> x = unit_vector(*a.x_angle);
    const Vector2<double> y = unit_vector(*a.y_angle);
    const auto wa = strategy_windows(x, rep.theta);
    const auto wb = strategy_windows(y, rep.tau);
    j["probs_a"] = windows_to_json(wa);
    j["probs_b"] = windows_to_json(wb);
    j["value"] = quantum_payoff_vectors(c, rep, x, y);
    j["value_from_probabilities"] = quantum_payoff_probabilities(c, wa, wb);
  }
  out << dump(j);
  return kExitOk;
}

int payoff_classical(const std::string& payoff, std::ostream& out) {
  const auto c = parse_payoff(payoff);
  json j{{"payoff", payoff_to_json(c)},
         {"classical_value", classical_value(c)},
         {"p1", c.c1 / (c.c1 + c.c3)},
         {"q1", c.c3 / (c.c1 + c.c3)},
         {"p2", c.c2 / (c.c2 + c.c4)},
         {"q2", c.c4 / (c.c2 + c.c4)}};
  out << dump(j);
  return kExitOk;
}

// solve / sweep -------------------------------------------------------------

bool is_degenerate(EquilibriumKind k) {
  return k == EquilibriumKind::kDegenerateGame || k == EquilibriumKind::kDegenerateOmega ||
         k == EquilibriumKind::kDegenerateRepresentation;
}

ErrorKind error_kind_for(EquilibriumKind k) {
  switch (k) {
    case EquilibriumKind::kDegenerateGame: return ErrorKind::kDegenerateGame;
    case EquilibriumKind::kDegenerateOmega: return ErrorKind::kDegenerateOmega;
    default: return ErrorKind::kDegenerateRepresentation;
  }
}

const char* kCsvHeader = "c1,c2,c3,c4,theta,kind,value\n";

std::string csv_row(const PayoffMatrix<double>& c, const EquilibriumReport<double>& r) {
  std::string row = format_double(c.c1) + "," + format_double(c.c2) + "," + format_double(c.c3) + "," +
                    format_double(c.c4) + ",";
  if (r.theta) row += format_double(*r.theta);
  row += ",";
  row += std::string(to_string(r.kind)) + ",";
  if (!r.equilibria.empty()) row += format_double(r.equilibria.front().value);
  return row + "\n";
}

struct SolveArgs {
  std::string payoff;
  bool verify = false;
  std::size_t grid = 4096;
  std::string json_out;
  unsigned threads = 1;
};

int solve(const SolveArgs& a, const Tolerances& tol, Format format, std::ostream& out, std::ostream& err) {
  const auto c = parse_payoff(a.payoff);
  const auto report = solve_eigenequilibrium(c, tol);
  json j = report_to_json(report);
  j["payoff"] = payoff_to_json(c);
  const double h = classical_value(c);
  j["classical_value"] = h;
  j["quantum_beats_classical"] =
      report.equilibria.empty() ? json(nullptr) : json(report.equilibria.front().value > h);
  if (a.verify) {
    if (!report.equilibria.empty()) {
      const Representation<double> rep{*report.theta, *report.theta};
      OracleOptions opts;
      opts.grid = a.grid;
      opts.threads = a.threads;
      opts.eps_rel = tol.oracle_eps_rel;
      json verdicts = json::array();
      bool all = true;
      for (const auto& e : report.equilibria) {
        const auto v = saddle_oracle(c, rep, e.x, e.y, opts);
        verdicts.push_back(verdict_to_json(v));
        all = all && v.pass;
      }
      j["oracle"] = all ? "pass" : "fail";
      j["oracle_verdicts"] = verdicts;
    } else {
      const double theta = report.theta.value_or(std::numbers::pi / 4);
      ScanOptions scan;
      scan.threads = a.threads;
      json found = json::array();
      for (const auto& s : saddle_scan(c, {theta, theta}, scan)) found.push_back(saddle_point_to_json(s));
      j["oracle"] = "not-applicable";
      j["uncertified_candidate"] = {{"certified", false},
                                    {"representation_theta", theta},
                                    {"angle_from_solver", report.theta.has_value()},
                                    {"saddles", found}};
    }
  }
  if (!a.json_out.empty()) write_file(a.json_out, dump(j));
  if (format == Format::kCsv) {
    out << kCsvHeader << csv_row(c, report);
  } else {
    out << dump(j);
  }
  if (is_degenerate(report.kind)) {
    const std::string message = report.notes.empty() ? std::string(to_string(report.kind)) : report.notes.front();
    err << error_object(error_kind_for(report.kind), message).dump() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}

std::vector<double> parse_range(const std::string& s) {
  const auto parts = split(s, ':');
  if (parts.size() == 1) return {parse_double(parts[0], "range value")};
  if (parts.size() != 3) throw UsageError("range must be 'value' or 'lo:hi:count', got '" + s + "'");
  const double lo = parse_double(parts[0], "range start");
  const double hi = parse_double(parts[1], "range end");
  const double count = parse_double(parts[2], "range count");
  if (!(count >= 1) || count != std::floor(count)) throw UsageError("range count must be a positive integer");
  const auto n = static_cast<std::size_t>(count);
  std::vector<double> v;
  for (std::size_t i = 0; i < n; ++i)
    v.push_back(n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1));
  return v;
}

int sweep(const std::string& range, const Tolerances& tol, Format format, std::ostream& out) {
  const auto parts = split(range, ',');
  if (parts.size() != 4) throw UsageError("--payoff-range needs four comma-separated ranges");
  std::array<std::vector<double>, 4> axes;
  for (int i = 0; i < 4; ++i) axes[i] = parse_range(parts[i]);
  json rows = json::array();
  std::string csv = kCsvHeader;
  for (double c1 : axes[0])
    for (double c2 : axes[1])
      for (double c3 : axes[2])
        for (double c4 : axes[3]) {
          const auto c = make_payoff(c1, c2, c3, c4);
          const auto r = solve_eigenequilibrium(c, tol);
          csv += csv_row(c, r);
          rows.push_back({{"payoff", payoff_to_json(c)},
                          {"theta", r.theta ? json(*r.theta) : json(nullptr)},
                          {"kind", std::string(to_string(r.kind))},
                          {"value", r.equilibria.empty() ? json(nullptr) : json(r.equilibria.front().value)}});
        }
  if (format == Format::kJson) {
    out << dump(rows);
  } else {
    out << csv;
  }
  return kExitOk;
}

// simulate ------------------------------------------------------------------

std::uint64_t default_seed() {
  if (const char* env = std::getenv(kSeedEnv)) {
    std::uint64_t v = 0;
    const std::string s(env);
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec == std::errc() && res.ptr == s.data() + s.size()) return v;
    throw UsageError(std::string(kSeedEnv) + " must be an unsigned integer");
  }
  return 0;
}

struct SimulateArgs {
  std::string config;
  std::string out_path;
  std::string running_csv;
};

std::string running_to_csv(const SimulationResult& r) {
  std::string csv = "rounds,running_mean\n";
  for (const auto& [done, mean] : r.running) csv += std::to_string(done) + "," + format_double(mean) + "\n";
  return csv;
}

int simulate(const SimulateArgs& a, std::optional<std::uint64_t> seed, Format format, std::ostream& out) {
  auto cfg = sim_config_from_json(read_json_file(a.config), default_seed());
  if (seed) cfg.seed = *seed;
  const auto result = run_game(cfg);
  const json j{{"config", sim_config_to_json(cfg)}, {"result", sim_result_to_json(result)}};
  if (!a.running_csv.empty()) write_file(a.running_csv, running_to_csv(result));
  if (!a.out_path.empty()) write_file(a.out_path, dump(j));
  if (format == Format::kCsv) {
    out << running_to_csv(result);
  } else if (a.out_path.empty()) {
    out << dump(j);
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equilibria and simulation of two-box quantum games", "sgq"};
  app.require_subcommand(1);
  app.fallthrough();

  bool want_json = false, want_csv = false;
  std::optional<std::uint64_t> seed;
  std::string tolerance_overrides;
  auto* json_flag = app.add_flag("--json", want_json, "Machine output as JSON (default)");
  app.add_flag("--csv", want_csv, "Machine output as CSV where supported")->excludes(json_flag);
  app.add_option("--seed", seed, "Simulation seed (overrides config and " + std::string(kSeedEnv) + ")");
  app.add_option("--tolerance-overrides", tolerance_overrides,
                 "key=value,... for multiplicity_rel, eigen_residual, degenerate_delta_rel, "
                 "degenerate_angle, oracle_eps_rel");

  auto* lattice = app.add_subcommand("lattice", "Finite ortholattice checks");
  lattice->require_subcommand(1);
  std::string lattice_target;
  auto* lattice_check_cmd = lattice->add_subcommand("check", "Check lattice laws for a fixture or JSON file");
  lattice_check_cmd->add_option("target", lattice_target, "firefly | boolean4 | path to lattice JSON")->required();

  auto* measures = app.add_subcommand("measures", "Window probability calculus");
  measures->require_subcommand(1);
  double wu = 0, wl = 0, theta = 0, wd = 0;
  std::optional<double> free;
  auto* ellipse = measures->add_subcommand("ellipse", "Constraint-ellipse residual of (w_u, w_l)");
  ellipse->add_option("--wu", wu)->required();
  ellipse->add_option("--wl", wl)->required();
  ellipse->add_option("--theta", theta, "Representation angle (rad)")->required();
  auto* embed = measures->add_subcommand("embed", "Quadrant distribution for given window marginals");
  embed->add_option("--wl", wl)->required();
  embed->add_option("--wd", wd)->required();
  embed->add_option("--free", free, "w1; defaults to the middle of its feasible interval");

  auto* payoff = app.add_subcommand("payoff", "Payoff evaluation");
  payoff->require_subcommand(1);
  PayoffEvalArgs eval_args;
  auto* eval = payoff->add_subcommand("eval", "Payoff of a strategy pair");
  eval->add_option("--payoff", eval_args.payoff, "c1,c2,c3,c4")->required();
  eval->add_option("--p", eval_args.p, "A probabilities p1,p2,p3,p4 = w_u,w_l,w_d,w_r");
  eval->add_option("--q", eval_args.q, "B probabilities q1,q2,q3,q4");
  eval->add_option("--x-angle", eval_args.x_angle, "A strategy angle (rad)");
  eval->add_option("--y-angle", eval_args.y_angle, "B strategy angle (rad)");
  eval->add_option("--theta", eval_args.theta, "A representation angle (rad)");
  eval->add_option("--tau", eval_args.tau, "B representation angle (rad)");
  std::string classical_payoff;
  auto* classical = payoff->add_subcommand("classical", "Classical saddle value");
  classical->add_option("--payoff", classical_payoff, "c1,c2,c3,c4")->required();

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Solve for eigenequilibria");
  solve_cmd->add_option("--payoff", solve_args.payoff, "c1,c2,c3,c4")->required();
  solve_cmd->add_flag("--verify", solve_args.verify, "Certify with the brute-force saddle oracle");
  solve_cmd->add_option("--grid", solve_args.grid, "Oracle grid size")->check(CLI::Range(256, 1 << 22));
  solve_cmd->add_option("--json", solve_args.json_out, "Also write the report to this file");
  solve_cmd->add_option("--threads", solve_args.threads, "Oracle threads")->check(CLI::Range(1, 256));

  std::string payoff_range;
  auto* sweep_cmd = app.add_subcommand("sweep", "Solve over a payoff grid (CSV)");
  sweep_cmd->add_option("--payoff-range", payoff_range, "r1,r2,r3,r4 with each r = value | lo:hi:count")
      ->required();

  SimulateArgs sim_args;
  auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo firefly game");
  simulate_cmd->add_option("--config", sim_args.config, "Simulation config JSON")->required();
  simulate_cmd->add_option("--out", sim_args.out_path, "Result JSON path (stdout if absent)");
  simulate_cmd->add_option("--running-csv", sim_args.running_csv, "Per-chunk running averages CSV path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  const Format format = want_csv ? Format::kCsv : want_json ? Format::kJson : Format::kDefault;
  try {
    const Tolerances tol = parse_tolerances(tolerance_overrides);
    if (lattice_check_cmd->parsed()) return lattice_check(lattice_target, format, out);
    if (format == Format::kCsv && !solve_cmd->parsed() && !sweep_cmd->parsed() && !simulate_cmd->parsed())
      throw UsageError("--csv is supported by solve, sweep and simulate only");
    if (ellipse->parsed()) return measures_ellipse(wu, wl, theta, out);
    if (embed->parsed()) return measures_embed(wl, wd, free, out);
    if (eval->parsed()) return payoff_eval(eval_args, out);
    if (classical->parsed()) return payoff_classical(classical_payoff, out);
    if (solve_cmd->parsed()) return solve(solve_args, tol, format, out, err);
    if (sweep_cmd->parsed()) return sweep(payoff_range, tol, format, out);
    if (simulate_cmd->parsed()) return simulate(sim_args, seed, format, out);
  } catch (const DomainError& e) {
    err << error_object(e.kind(), e.what(), e.details()).dump() << "\n";
    return kExitDomain;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace sgq::cli
