// Copyright 2026 Minimax Solvers Contributors
// Licensed under the Apache License, Version 2.0
#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "bench/config.hpp"
#include "bench/runner.hpp"
#include "bench/verify.hpp"

namespace {

using namespace minimax::bench;

int write_output(const std::string& path, const std::string& payload) {
  if (path == "-") {
    std::cout << payload;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return 1;
  }
  out << payload;
  return 0;
}

int cmd_solve(const std::string& config_path) {
  SolveConfig cfg;
  try {
    cfg = parse_solve_config(load_json_file(config_path));
  } catch (const ConfigError& e) {
    std::cerr << "invalid config: " << e.what() << "\n";
    return 2;
  }
  try {
    const RunRecord rec = run_solve(cfg);
    const std::string payload = record_to_json(rec).dump(2) + "\n";
    const int wrc = write_output(cfg.output, payload);
    if (wrc != 0) return wrc;
    return rec.status == "ok" ? 0 : 1;
  } catch (const ConfigError& e) {
    std::cerr << "invalid config: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid config: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "run failed: " << e.what() << "\n";
    return 1;
  }
}

int cmd_sweep(const std::string& config_path) {
  SweepConfig cfg;
  try {
    cfg = parse_sweep_config(load_json_file(config_path));
  } catch (const ConfigError& e) {
    std::cerr << "invalid config: " << e.what() << "\n";
    return 2;
  }
  try {
    const auto rows = run_sweep(cfg);
    const int wrc = write_output(cfg.output, sweep_to_csv(rows));
    if (wrc != 0) return wrc;
    for (const auto& r : rows)
      if (r.status != "ok") return 1;
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "invalid config: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid config: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "run failed: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"First-order minimax solvers and oracle-complexity benchmarks"};
  app.require_subcommand(1);

  std::string solve_config, sweep_config, suite;
  auto* solve = app.add_subcommand("solve", "run one configured solve, emit a JSON record");
  solve->add_option("config", solve_config, "JSON config path")->required();
  auto* sweep = app.add_subcommand("sweep", "run a kappa/eps grid, emit CSV");
  sweep->add_option("config", sweep_config, "JSON config path")->required();
  auto* verify = app.add_subcommand("verify", "run a named invariant suite");
  verify->add_option("suite", suite, "contraction|lemma-lipschitz|moreau|reductions|projections|all")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (solve->parsed()) return cmd_solve(solve_config);
  if (sweep->parsed()) return cmd_sweep(sweep_config);
  if (verify->parsed()) return run_verify_suite(suite, std::cout);
  return 2;
}
