// Copyright 2026 Minimax Solvers Contributors
// Licensed under the Apache License, Version 2.0
#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "minimax/problem.hpp"
#include "minimax/types.hpp"

namespace minimax {

// Theoretical constants are kept verbatim unless double precision cannot
// represent or reach them; every substitution is recorded here so a run's
// certificate can be interpreted honestly.
struct ToleranceEntry {
  std::string name;
  double theoretical = 0.0;
  double applied = 0.0;
  bool clamped = false;  // faithful=false when the theoretical value was replaced
};

struct ToleranceLedger {
  std::vector<ToleranceEntry> entries;

  void record(const std::string& name, double theoretical, double applied) {
    for (const auto& e : entries)
      if (e.name == name) return;  // constants repeat across inner calls; keep the first
    entries.push_back({name, theoretical, applied, applied != theoretical});
  }

  void merge(const ToleranceLedger& other) {
    for (const auto& e : other.entries) {
      bool seen = false;
      for (const auto& mine : entries)
        if (mine.name == e.name) { seen = true; break; }
      if (!seen) entries.push_back(e);
    }
  }

  bool any_clamped() const {
    return std::any_of(entries.begin(), entries.end(),
                       [](const ToleranceEntry& e) { return e.clamped; });
  }
};

// Iteration budgets. Zero means "use the solver's theory-derived default".
struct Caps {
  long long max_outer = 0;
  long long agd_max_iters = 0;
  long long hard_cap = 10'000'000;
};

enum class Mode { Faithful, Practical };

inline const char* to_string(Mode m) { return m == Mode::Faithful ? "faithful" : "practical"; }

struct SolverReport {
  Status status = Status::Ok;
  Vector x;
  std::optional<Vector> y;
  long long outer_iters = 0;
  long long inner_iters = 0;  // summed over all nested solves
  ToleranceLedger ledger;
  std::optional<unsigned long long> seed;
  std::optional<long long> picked_index;  // randomized drivers: the sampled iterate

  void absorb(const SolverReport& inner) {
    inner_iters += inner.outer_iters + inner.inner_iters;
    ledger.merge(inner.ledger);
    if (inner.status != Status::Ok && status == Status::Ok) status = inner.status;
  }
};

// Clamp policies for theoretical constants that underflow in doubles.
// Value-tolerances clamp at 1e-14 * eps; squared length thresholds at
// 1e-14 * eps / ell; plain lengths at the square root of the squared clamp.
inline double clamp_value_tol(ToleranceLedger& ledger, const std::string& name, double theoretical,
                              double eps) {
  const double applied = std::max(theoretical, 1e-14 * eps);
  ledger.record(name, theoretical, applied);
  return applied;
}

inline double clamp_sq_threshold(ToleranceLedger& ledger, const std::string& name,
                                 double theoretical, double eps, double ell) {
  const double applied = std::max(theoretical, 1e-14 * eps / ell);
  ledger.record(name, theoretical, applied);
  return applied;
}

inline double clamp_length_tol(ToleranceLedger& ledger, const std::string& name,
                               double theoretical, double eps, double ell) {
  const double applied = std::max(theoretical, std::sqrt(1e-14 * eps / ell));
  ledger.record(name, theoretical, applied);
  return applied;
}

}  // namespace minimax
