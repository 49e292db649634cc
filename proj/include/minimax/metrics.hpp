// Copyright 2026 Minimax Solvers Contributors
// Licensed under the Apache License, Version 2.0
#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "minimax/problem.hpp"
#include "minimax/types.hpp"

namespace minimax {

// Optimality certificate with an explicit bound on its own error, derived from
// the accuracy of the inner solves used to compute it.
struct Certificate {
  enum class Kind { DualityGap, StationarityF, PhiGrad, MoreauGrad };
  enum class Method { ClosedForm, InnerSolver, Grid };

  Kind kind = Kind::DualityGap;
  double value = 0.0;
  double error_bound = 0.0;
  double inner_tol = 0.0;
  Method method = Method::ClosedForm;
};

// max_y f(x_hat, y) - min_x f(x, y_hat), computed to +-2 inner_tol. Uses the
// problem's closed-form evaluators when valid, inner AGD solves when the
// relevant modulus is positive, and a dense grid for small bounded problems.
// Throws UncertifiableError when no method applies.
Certificate duality_gap(const MinimaxProblem& p, const Vector& x_hat, const Vector& y_hat,
                        double inner_tol);

// Projected-gradient residuals (r_x, r_y) of Definition-style stationarity:
// y+ = P_Y[y + grad_y / ell], r_y = ell ||y+ - y||,
// r_x = ell ||P_X[x - grad_x(x, y+) / ell] - x||.
std::pair<double, double> stationarity_f(const MinimaxProblem& p, const Vector& x_hat,
                                         const Vector& y_hat);

// ||grad_x f(x_hat, y*(x_hat))|| with y* resolved in closed form or by AGD to
// inner_tol; requires mu_y > 0. The reported error bound is
// ell * sqrt(2 inner_tol / mu_y) for the inner-solver path.
Certificate phi_grad_norm(const MinimaxProblem& p, const Vector& x_hat, double inner_tol);

// Moreau-envelope gradient norm 2 ell ||x_hat - prox_{Phi/2ell}(x_hat)|| where
// prox is argmin_w Phi(w) + ell ||w - x_hat||^2.
//
// Minimax overload: the prox subproblem min_w max_y f(w,y) + ell||w - x_hat||^2
// is solved with maximin_ag2 (after a small y-regularization when mu_y = 0).
Certificate moreau_grad_norm(const MinimaxProblem& p, const Vector& x_hat, double ell,
                             double inner_tol);

// Black-box overload for an ell-weakly-convex Phi (caller-asserted); the prox
// objective is then unimodal per axis. 1-D uses golden-section on
// [x_hat - half_width, x_hat + half_width]; higher dims (<= 4) use a dense
// grid plus refinement.
Certificate moreau_grad_norm(const std::function<double(const Vector&)>& phi, const Vector& x_hat,
                             double ell, double inner_tol, double half_width = 10.0);

struct NearStationarityWitness {
  Vector x_bar;
  double dist = 0.0;
  Certificate moreau;  // dist * 2 ell equals moreau.value by construction
};

NearStationarityWitness near_stationarity_witness(const MinimaxProblem& p, const Vector& x_hat,
                                                  double ell, double inner_tol);
NearStationarityWitness near_stationarity_witness(const std::function<double(const Vector&)>& phi,
                                                  const Vector& x_hat, double ell,
                                                  double inner_tol, double half_width = 10.0);

struct GridSaddle {
  Vector x;
  Vector y;
  double value = 0.0;
  double error_bound = 0.0;
};

// Dense-grid minimax verification oracle for problems with total dim <= 4.
// Unbounded sets take their grid from `whole_space_box` (half-width around the
// reference saddle or the origin; default 10).
GridSaddle brute_force_saddle(const MinimaxProblem& p, int grid_per_dim,
                              double whole_space_box = 10.0);

}  // namespace minimax
