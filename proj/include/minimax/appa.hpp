// Copyright 2026 Minimax Solvers Contributors
// Licensed under the Apache License, Version 2.0
#pragma once

#include <functional>

#include "minimax/constraint_set.hpp"
#include "minimax/report.hpp"
#include "minimax/types.hpp"

namespace minimax {

// delta-accurate proximal subproblem solver: returns w with
//   g(w) + ell ||w - center||^2 <= min_x { g(x) + ell ||x - center||^2 } + delta.
using ProxSolver = std::function<Vector(const Vector& center, double ell, double delta)>;

struct AppaResult {
  Vector x;
  Status status = Status::Ok;
  double delta = 0.0;  // the inner accuracy actually requested
};

// T >= ceil(6 sqrt(kappa) log(max(gap0_upper / eps, e))); the constant 6 comes
// from the (1 - 1/(6 sqrt(kappa)))^T contraction rate.
long long suggest_T(double kappa, double gap0_upper, double eps);

// Inexact accelerated proximal point iteration for mu-strongly-convex g
// (no smoothness required). Runs exactly T proximal steps at accuracy
// delta = eps / (10 kappa)^2 with momentum theta = (2 sqrt(kappa) - 1) / (2 sqrt(kappa) + 1).
// The optional observer sees every iterate x_t (t = 1..T).
AppaResult inexact_appa(const std::function<double(const Vector&)>& g_value,
                        const ConstraintSet& set, const Vector& x0, double ell, double mu,
                        double eps, long long T, const ProxSolver& prox,
                        const std::function<void(long long, const Vector&)>& observer = nullptr);

}  // namespace minimax
