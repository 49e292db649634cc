// Copyright 2026 Minimax Solvers Contributors
// Licensed under the Apache License, Version 2.0
#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "minimax/problems.hpp"
#include "minimax/report.hpp"

namespace minimax::bench {

// Thrown for malformed configs; the CLI maps it to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct SolverConfig {
  std::string name;
  double eps = 1e-3;
  std::optional<long long> T;
  std::optional<std::uint64_t> seed;
  Mode mode = Mode::Faithful;
};

struct SolveConfig {
  ProblemSpec problem;
  SolverConfig solver;
  Caps caps;
  std::string output = "-";
  bool measure_time = false;
};

struct SweepConfig {
  Family family = Family::QuadraticScsc;
  int dim = 4;
  std::uint64_t problem_seed = 0;
  std::vector<std::string> solvers;
  Mode mode = Mode::Faithful;
  std::vector<double> kappa_x;
  std::vector<double> kappa_y;
  std::vector<double> eps;
  std::vector<std::uint64_t> seeds = {0};
  Caps caps;
  std::string output = "-";
  int workers = 1;
  bool measure_time = false;
};

// Strict parsers: unknown keys are rejected (fail closed).
SolveConfig parse_solve_config(const nlohmann::json& j);
SweepConfig parse_sweep_config(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);

bool solver_is_randomized(const std::string& name);
bool solver_is_known(const std::string& name);

}  // namespace minimax::bench
