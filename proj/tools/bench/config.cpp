// Copyright 2026 Minimax Solvers Contributors
// Licensed under the Apache License, Version 2.0
#include "bench/config.hpp"

#include <algorithm>
#include <fstream>
#include <set>

namespace minimax::bench {

namespace {

using nlohmann::json;

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where + ": expected an object");
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (!allowed.count(key)) throw ConfigError(where + ": unknown key '" + key + "'");
  }
}

double require_positive(const json& j, const std::string& where) {
  if (!j.is_number()) throw ConfigError(where + ": expected a number");
  const double v = j.get<double>();
  if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError(where + ": must be positive and finite");
  return v;
}

ProblemSpec parse_problem(const json& j) {
  check_keys(j,
             {"family", "dim_x", "dim_y", "dim", "seed", "mu_x", "mu_y", "kappa_x", "kappa_y",
              "scc_diameter", "box_radius"},
             "problem");
  if (!j.contains("family")) throw ConfigError("problem: missing 'family'");
  const auto family = family_from_string(j["family"].get<std::string>());
  if (!family) throw ConfigError("problem: unknown family '" + j["family"].get<std::string>() + "'");
  ProblemSpec spec;
  spec.family = *family;
  if (j.contains("dim")) spec.dim_x = spec.dim_y = j["dim"].get<int>();
  if (j.contains("dim_x")) spec.dim_x = j["dim_x"].get<int>();
  if (j.contains("dim_y")) spec.dim_y = j["dim_y"].get<int>();
  if (spec.dim_x < 1 || spec.dim_y < 1) throw ConfigError("problem: dims must be >= 1");
  if (j.contains("seed")) spec.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("mu_x")) spec.mu_x = require_positive(j["mu_x"], "problem.mu_x");
  if (j.contains("mu_y")) spec.mu_y = require_positive(j["mu_y"], "problem.mu_y");
  if (j.contains("kappa_x")) spec.kappa_x = require_positive(j["kappa_x"], "problem.kappa_x");
  if (j.contains("kappa_y")) spec.kappa_y = require_positive(j["kappa_y"], "problem.kappa_y");
  if (j.contains("scc_diameter"))
    spec.scc_diameter = require_positive(j["scc_diameter"], "problem.scc_diameter");
  if (j.contains("box_radius"))
    spec.box_radius = require_positive(j["box_radius"], "problem.box_radius");
  return spec;
}

Caps parse_caps(const json& j) {
  check_keys(j, {"max_outer", "agd_max_iters", "hard_cap"}, "caps");
  Caps caps;
  if (j.contains("max_outer")) caps.max_outer = j["max_outer"].get<long long>();
  if (j.contains("agd_max_iters")) caps.agd_max_iters = j["agd_max_iters"].get<long long>();
  if (j.contains("hard_cap")) caps.hard_cap = j["hard_cap"].get<long long>();
  return caps;
}

Mode parse_mode(const json& j, const std::string& where) {
  const std::string mode = j.get<std::string>();
  if (mode == "faithful") return Mode::Faithful;
  if (mode == "practical") return Mode::Practical;
  throw ConfigError(where + ": mode must be 'faithful' or 'practical'");
}

}  // namespace

bool solver_is_known(const std::string& name) {
  static const std::set<std::string> known = {
      "maximin_ag2",   "minimax_appa", "scc_solve",         "cc_solve",
      "minimax_ppa",   "nc_solve",     "nc_moreau_solve",   "scsc_near_optimal",
      "scc_near_optimal", "nsc_accelerated", "nc_accelerated"};
  return known.count(name) > 0;
}

bool solver_is_randomized(const std::string& name) {
  static const std::set<std::string> randomized = {"minimax_ppa", "nc_solve", "nc_moreau_solve",
                                                   "nsc_accelerated", "nc_accelerated"};
  return randomized.count(name) > 0;
}

SolveConfig parse_solve_config(const json& j) {
  check_keys(j, {"problem", "solver", "caps", "output", "measure_time"}, "config");
  if (!j.contains("problem") || !j.contains("solver"))
    throw ConfigError("config: requires 'problem' and 'solver'");
  SolveConfig cfg;
  cfg.problem = parse_problem(j["problem"]);
  const json& s = j["solver"];
  check_keys(s, {"name", "eps", "T", "seed", "mode"}, "solver");
  if (!s.contains("name")) throw ConfigError("solver: missing 'name'");
  cfg.solver.name = s["name"].get<std::string>();
  if (!solver_is_known(cfg.solver.name))
    throw ConfigError("solver: unknown solver '" + cfg.solver.name + "'");
  if (!s.contains("eps")) throw ConfigError("solver: missing 'eps'");
  cfg.solver.eps = require_positive(s["eps"], "solver.eps");
  if (s.contains("T")) cfg.solver.T = s["T"].get<long long>();
  if (s.contains("seed")) cfg.solver.seed = s["seed"].get<std::uint64_t>();
  if (s.contains("mode")) cfg.solver.mode = parse_mode(s["mode"], "solver");
  if (solver_is_randomized(cfg.solver.name) && !cfg.solver.seed)
    throw ConfigError("solver: '" + cfg.solver.name + "' is randomized and requires a seed");
  if (j.contains("caps")) cfg.caps = parse_caps(j["caps"]);
  if (j.contains("output")) cfg.output = j["output"].get<std::string>();
  if (j.contains("measure_time")) cfg.measure_time = j["measure_time"].get<bool>();
  return cfg;
}

SweepConfig parse_sweep_config(const json& j) {
  check_keys(j,
             {"problem", "solvers", "mode", "kappa_x", "kappa_y", "eps", "seeds", "caps",
              "output", "workers", "measure_time"},
             "config");
  SweepConfig cfg;
  if (j.contains("problem")) {
    const json& p = j["problem"];
    check_keys(p, {"family", "dim", "seed"}, "problem");
    if (p.contains("family")) {
      const auto family = family_from_string(p["family"].get<std::string>());
      if (!family) throw ConfigError("problem: unknown family");
      if (*family != Family::QuadraticScsc)
        throw ConfigError("sweep: only quadratic_scsc supports exact-kappa sweeps");
      cfg.family = *family;
    }
    if (p.contains("dim")) cfg.dim = p["dim"].get<int>();
    if (p.contains("seed")) cfg.problem_seed = p["seed"].get<std::uint64_t>();
  }
  if (!j.contains("solvers") || !j["solvers"].is_array() || j["solvers"].empty())
    throw ConfigError("sweep: requires a non-empty 'solvers' array");
  for (const auto& s : j["solvers"]) {
    const std::string name = s.get<std::string>();
    if (!solver_is_known(name)) throw ConfigError("sweep: unknown solver '" + name + "'");
    cfg.solvers.push_back(name);
  }
  if (j.contains("mode")) cfg.mode = parse_mode(j["mode"], "sweep");
  auto parse_list = [&](const char* key, std::vector<double>& out) {
    if (!j.contains(key)) throw ConfigError(std::string("sweep: missing '") + key + "'");
    for (const auto& v : j[key]) out.push_back(require_positive(v, key));
  };
  parse_list("kappa_x", cfg.kappa_x);
  parse_list("kappa_y", cfg.kappa_y);
  parse_list("eps", cfg.eps);
  if (j.contains("seeds")) {
    cfg.seeds.clear();
    for (const auto& v : j["seeds"]) cfg.seeds.push_back(v.get<std::uint64_t>());
    if (cfg.seeds.empty()) throw ConfigError("sweep: 'seeds' must not be empty");
  }
  if (j.contains("caps")) cfg.caps = parse_caps(j["caps"]);
  if (j.contains("output")) cfg.output = j["output"].get<std::string>();
  if (j.contains("workers")) cfg.workers = j["workers"].get<int>();
  if (cfg.workers < 1) throw ConfigError("sweep: workers must be >= 1");
  if (j.contains("measure_time")) cfg.measure_time = j["measure_time"].get<bool>();
  // Deterministic row order regardless of listing order.
  std::sort(cfg.solvers.begin(), cfg.solvers.end());
  std::sort(cfg.kappa_x.begin(), cfg.kappa_x.end());
  std::sort(cfg.kappa_y.begin(), cfg.kappa_y.end());
  std::sort(cfg.eps.begin(), cfg.eps.end());
  std::sort(cfg.seeds.begin(), cfg.seeds.end());
  return cfg;
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
}

}  // namespace minimax::bench
