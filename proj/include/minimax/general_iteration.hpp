// Copyright 2026 Minimax Solvers Contributors
// Licensed under the Apache License, Version 2.0
#pragma once

#include <cstdint>
#include <optional>

#include "minimax/problem.hpp"
#include "minimax/report.hpp"

namespace minimax {

struct GIterOptions {
  Caps caps;
  // Start for the ascent sequence; defaults to the set's canonical point.
  std::optional<Vector> y_start;
};

// f - (eta / 2 D^2) ||y - y0||^2; adds eta / D^2 strong concavity in y.
MinimaxProblem make_f_eta(const MinimaxProblem& f, double eta, const Vector& y0);

// General iteration I: solves min_x max_y f(x,y) + ell ||x - x_bar||^2 to
// criterion max_y g(x_hat, y) <= min_x max_y g + eps_bar. Two fixed-point
// inner loops around the 1/2-contraction T_z(x) = P_X(x_bar - grad_x/(2 ell))
// sandwich one inexact accelerated ascent step; stops when the 1/(4 ell)
// ascent residual falls below sqrt(eps_bar / 2 kbar ell) / (48 kbar).
SolverReport g1(const MinimaxProblem& f, const Vector& x_bar, const Vector& x0, double eps_bar,
                const GIterOptions& options = {});

// General iteration II: Nesterov ascent on f(x_tilde, .) until the 1/ell
// residual falls below sqrt(eps_tilde / 2 ell) / kbar, guaranteeing
// max_y f(x_tilde, y) <= f(x_tilde, y_hat) + eps_tilde. The result is in
// report.y.
SolverReport g2(const MinimaxProblem& f, const Vector& x_tilde, double eps_tilde,
                const GIterOptions& options = {});

struct NearOptimalOptions {
  Caps caps;
  std::optional<Vector> y_start;
  // scc only: regularize with f_{eps_bar} / f_{eps_tilde} at halved tolerances
  // instead of the printed single f_eps. With that pattern the regularized
  // condition number is ell D^2 / eps_bar, which explodes as eps^-4; the
  // printed reading keeps it at ell D^2 / eps and matches the stated total
  // complexity, so it is the default.
  bool proposition_regularizer = false;
};

// Accelerated proximal loop with G1 proximal solves and a two-term momentum
// correction; strongly-convex-strongly-concave f. Returns (x_{T+1}, y_{T+1}).
SolverReport scsc_near_optimal(const MinimaxProblem& f, const Vector& x0, double eps, long long T,
                               const NearOptimalOptions& options = {});

// Strongly-convex-concave variant running on the y-regularized f_eta.
SolverReport scc_near_optimal(const MinimaxProblem& f, const Vector& x0, const Vector& y0,
                              double eps, long long T, const NearOptimalOptions& options = {});

// Proximal-point loop x_{t+1} = G1(f, x_t, x0, eps^2/(144 kbar^2 ell)) with a
// uniformly random output from {x_0..x_{T-1}}; NC-SC setting.
SolverReport nsc_accelerated(const MinimaxProblem& f, const Vector& x0, double eps, long long T,
                             std::uint64_t seed, const NearOptimalOptions& options = {});

// NC-C variant on f_{eps_bar} with eps_bar = eps^2/(48 ell); output sampled
// from {x_1..x_{T+1}} and certified through the Moreau envelope.
SolverReport nc_accelerated(const MinimaxProblem& f, const Vector& x0, const Vector& y0,
                            double eps, long long T, std::uint64_t seed,
                            const NearOptimalOptions& options = {});

}  // namespace minimax
