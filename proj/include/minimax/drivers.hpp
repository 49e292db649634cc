// Copyright 2026 Minimax Solvers Contributors
// Licensed under the Apache License, Version 2.0
#pragma once

#include <cstdint>
#include <functional>

#include "minimax/maximin_ag2.hpp"
#include "minimax/problem.hpp"
#include "minimax/report.hpp"

namespace minimax {

// Regularization reductions: each adds an exact quadratic term to the oracles
// and updates the profile's moduli (ell grows by the largest added curvature).
struct ReductionSpec {
  enum class Kind {
    Scc,       // f - eps/(4 Dy^2) ||y - y0||^2
    Cc,        // f + eps/(8 Dx^2) ||x - x0||^2 - eps/(8 Dy^2) ||y - y0||^2
    Nc,        // f - eps/(4 Dy)   ||y - y0||^2
    NcMoreau,  // f - eps^2/(200 ell Dy^2) ||y - y0||^2
  };
  Kind kind = Kind::Scc;
  double eps = 0.0;
  Vector x0;  // anchor for the x-term (Cc only)
  Vector y0;  // anchor for the y-term
};

MinimaxProblem reduce(const MinimaxProblem& base, const ReductionSpec& spec);

struct DriverOptions {
  Mode mode = Mode::Faithful;
  Caps caps;
  // Sees each outer iterate x_t, t = 1..T.
  std::function<void(long long, const Vector&)> observer;
  MaximinHooks maximin_hooks;
};

// Outer inexact APPA on Phi with Maximin-AG2 proximal solves at accuracy
// eps/(10 kx ky)^4 (practical: ^2), followed by one AGD ascent in y at
// eps/(100 kx ky) and a final half-step projection. Runs exactly T proximal
// steps. Returns (x_T, y_T).
SolverReport minimax_appa(const MinimaxProblem& f, const Vector& x0, const Vector& y0, double ell,
                          double mu_x, double mu_y, double eps, long long T,
                          const DriverOptions& options = {});

// Strongly-convex-concave reduction: solves f - eps/(4 Dy^2)||y-y0||^2 via
// minimax_appa with mu_y = eps/(4 Dy^2) and tolerance eps/2; the result is an
// eps-saddle of the original f.
SolverReport scc_solve(const MinimaxProblem& f, const Vector& x0, const Vector& y0, double ell,
                       double mu_x, double eps, long long T, const DriverOptions& options = {});

// Convex-concave reduction via f_eps (both-sided regularization).
SolverReport cc_solve(const MinimaxProblem& f, const Vector& x0, const Vector& y0, double ell,
                      double eps, long long T, const DriverOptions& options = {});

// Proximal point iteration on Phi for nonconvex-strongly-concave f: T proximal
// steps solved by Maximin-AG2, then a uniformly random iterate x_s (seeded)
// with y_s from one AGD ascent. Output is eps-stationary w.p. >= 2/3 for T at
// the suggest_T_ppa scale.
SolverReport minimax_ppa(const MinimaxProblem& f, const Vector& x0, const Vector& y0, double ell,
                         double mu_y, double eps, long long T, std::uint64_t seed,
                         const DriverOptions& options = {});

// Nonconvex-concave reduction (gradient-close regularizer).
SolverReport nc_solve(const MinimaxProblem& f, const Vector& x0, const Vector& y0, double ell,
                      double eps, long long T, std::uint64_t seed,
                      const DriverOptions& options = {});

// Nonconvex-concave reduction aimed at the Moreau-envelope criterion
// ||grad Phi_{1/2 ell}(x_hat)|| <= eps.
SolverReport nc_moreau_solve(const MinimaxProblem& f, const Vector& x0, const Vector& y0,
                             double ell, double eps, long long T, std::uint64_t seed,
                             const DriverOptions& options = {});

// T >= ceil(8 ell delta_phi_upper / eps^2) + 1, from the descent-lemma bound.
long long suggest_T_ppa(double ell, double delta_phi_upper, double eps);

}  // namespace minimax
