// Copyright 2026 Minimax Solvers Contributors
// Licensed under the Apache License, Version 2.0
#pragma once

#include <functional>

#include "minimax/agd.hpp"
#include "minimax/problem.hpp"
#include "minimax/report.hpp"

namespace minimax {

struct MaximinHooks {
  // Called before each inner AGD solve; `which` is 0 for the pre-ascent solve
  // (Line 5) and 1 for the post-ascent solve (Line 8). `start` is the point the
  // inner solver is launched from.
  std::function<void(long long outer_t, int which, const Vector& start)> on_inner_agd_start;
};

struct MaximinOptions {
  Mode mode = Mode::Faithful;
  // Deviation from the pseudocode for experiments only: start inner AGD from
  // the previous minimizer instead of x0.
  bool warm_start_inner = false;
  Caps caps;
  MaximinHooks hooks;
};

// Two-timescale accelerated solver for strongly-convex-strongly-concave g:
// inner AGD minimizations in x at tolerance eps/(10 kx ky)^7, outer accelerated
// projected ascent in y with step 1/(2 kx ell), stopping when the squared
// ascent residual falls below eps/((10 kx ky)^4 ell). Practical mode lowers
// both exponents to 2. Returns x_hat = P_X(x_T - grad_x/(2 ky ell)) with the
// last y iterate in the report.
//
// ell / mu_x / mu_y are taken from the arguments, not from g.profile, so
// callers may pass the deliberately loosened constants used by the drivers.
SolverReport maximin_ag2(const MinimaxProblem& g, const Vector& x0, const Vector& y0, double ell,
                         double mu_x, double mu_y, double eps,
                         const MaximinOptions& options = {});

}  // namespace minimax
