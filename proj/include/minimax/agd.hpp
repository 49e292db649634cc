// Copyright 2026 Minimax Solvers Contributors
// Licensed under the Apache License, Version 2.0
#pragma once

#include <functional>

#include "minimax/constraint_set.hpp"
#include "minimax/report.hpp"
#include "minimax/types.hpp"

namespace minimax {

// An ell-smooth, mu-strongly-convex objective given through oracles.
// The value oracle is optional; the solver itself only queries gradients.
struct ScalarObjective {
  std::function<double(const Vector&)> value;
  std::function<Vector(const Vector&)> grad;
  double ell = 0.0;
  double mu = 0.0;
};

struct AgdResult {
  Vector x;
  long long iters = 0;
  Status status = Status::Ok;
  double residual_sq = 0.0;  // squared termination residual at the returned iterate
  long long grad_calls = 0;
};

// Default iteration budget: ceil(10 sqrt(kappa) log(max(kappa^3 ell d0^2 / eps, e))) + 10.
long long agd_suggested_bound(double kappa, double ell, double dist0_sq, double eps);

// Nesterov's accelerated projected gradient descent with residual-based
// termination: stops once ||x_t - P(x_t - grad/ell)||^2 <= eps / (2 kappa^2 (ell - mu))
// and returns P(x_t - grad/ell). With kappa <= 1 + 1e-9 a single projected
// gradient step is exact and is returned immediately.
//
// max_iter_cap == 0 selects the suggested bound (using the set diameter or a
// strong-convexity distance estimate when unbounded). On budget exhaustion the
// projected-gradient image of the best iterate seen is returned with status
// BudgetExhausted.
AgdResult agd(const ScalarObjective& obj, const ConstraintSet& set, const Vector& x0, double eps,
              long long max_iter_cap = 0, long long hard_cap = 10'000'000);

}  // namespace minimax
