// Copyright 2026 Minimax Solvers Contributors
// Licensed under the Apache License, Version 2.0
#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "bench/config.hpp"

namespace minimax::bench {

// One completed (or failed) run, flattened for reporting.
struct RunRecord {
  std::string solver;
  std::string problem;
  int dim_x = 0;
  int dim_y = 0;
  double kappa_x = 0.0;
  double kappa_y = 0.0;
  double eps = 0.0;
  std::string mode = "faithful";
  std::uint64_t seed = 0;
  long long T = 0;
  long long grad_x_calls = 0;
  long long grad_y_calls = 0;
  long long value_calls = 0;
  long long outer_iters = 0;
  long long wall_time_ms = 0;
  std::string status = "ok";
  double certificate = 0.0;
  double cert_error = 0.0;
  bool clamped = false;
  ToleranceLedger ledger;
};

// CSV header pinned by the interface contract; column order is bit-exact.
extern const char* const kCsvHeader;

std::string format_double(double v);  // shortest round-trip decimal
std::string csv_row(const RunRecord& r);
nlohmann::ordered_json record_to_json(const RunRecord& r);

// Runs one configured solve; throws ConfigError for configs a parser cannot
// see (e.g. a solver that needs closed-form data the problem lacks).
RunRecord run_solve(const SolveConfig& cfg);

// Expands the Cartesian grid in deterministic order and runs the cells,
// possibly concurrently (cell i uses RNG seed = seed xor cell index). Rows
// come back sorted by (solver, kappa_x, kappa_y, eps, seed).
std::vector<RunRecord> run_sweep(const SweepConfig& cfg);

std::string sweep_to_csv(const std::vector<RunRecord>& rows);

}  // namespace minimax::bench
