// Copyright 2026 Minimax Solvers Contributors
// Licensed under the Apache License, Version 2.0
#include "minimax/maximin_ag2.hpp"

#include <cmath>

namespace minimax {

SolverReport maximin_ag2(const MinimaxProblem& g, const Vector& x0, const Vector& y0, double ell,
                         double mu_x, double mu_y, double eps, const MaximinOptions& options) {
  if (!(eps > 0.0)) throw std::invalid_argument("maximin_ag2: eps must be positive");
  if (!(mu_x > 0.0) || !(mu_y > 0.0) || ell < mu_x || ell < mu_y)
    throw std::invalid_argument("maximin_ag2: need ell >= mu_x > 0 and ell >= mu_y > 0");
  if (!is_finite(x0) || !is_finite(y0))
    throw std::invalid_argument("maximin_ag2: non-finite start");
  const auto diam_y = g.set_y.diameter();
  if (!diam_y) throw std::invalid_argument("maximin_ag2: missing_diameter (set_y unbounded)");

  const double kappa_x = ell / mu_x;
  const double kappa_y = ell / mu_y;
  const double eta = 1.0 / (2.0 * kappa_x * ell);
  const double theta =
      (4.0 * std::sqrt(kappa_x * kappa_y) - 1.0) / (4.0 * std::sqrt(kappa_x * kappa_y) + 1.0);

  const double tenkk = 10.0 * kappa_x * kappa_y;
  const double inner_exp = options.mode == Mode::Practical ? 2.0 : 7.0;
  const double stop_exp = options.mode == Mode::Practical ? 2.0 : 4.0;

  SolverReport report;
  const double eps_tilde = clamp_value_tol(report.ledger, "maximin_ag2.eps_tilde",
                                           eps / std::pow(tenkk, inner_exp), eps);
  const double stop_sq = clamp_sq_threshold(report.ledger, "maximin_ag2.stop_threshold_sq",
                                            eps / (std::pow(tenkk, stop_exp) * ell), eps, ell);

  long long outer_cap = options.caps.max_outer;
  if (outer_cap == 0) {
    outer_cap = static_cast<long long>(std::ceil(
        20.0 * std::sqrt(kappa_x * kappa_y) *
        std::log(ell * (*diam_y) * (*diam_y) / eps + std::exp(1.0))));
  }
  if (outer_cap > options.caps.hard_cap) outer_cap = options.caps.hard_cap;

  auto inner_objective = [&](const Vector& y) {
    ScalarObjective obj;
    obj.grad = [&g, y](const Vector& x) { return g.grad_x(x, y); };
    obj.ell = ell;
    obj.mu = mu_x;
    return obj;
  };

  auto finish = [&](const Vector& x_t, const Vector& y_t, long long iters,
                    Status status) -> SolverReport {
    report.outer_iters = iters;
    report.status = status;
    const Vector gx = g.grad_x(x_t, y_t);
    const Vector x_hat = g.set_x.project(x_t - gx / (2.0 * kappa_y * ell));
    if (!is_finite(x_hat) && status == Status::Ok) report.status = Status::NumericalFailure;
    report.x = x_hat;
    report.y = y_t;
    return report;
  };

  Vector y_prev = y0;
  Vector y_tilde = y0;  // the pseudocode leaves y~_0 unassigned; we use y_0
  Vector x_t = x0;
  Vector agd_start = x0;

  for (long long t = 1;; ++t) {
    if (options.hooks.on_inner_agd_start) options.hooks.on_inner_agd_start(t, 0, agd_start);
    AgdResult pre = agd(inner_objective(y_tilde), g.set_x, agd_start, eps_tilde,
                         options.caps.agd_max_iters, options.caps.hard_cap);
    report.inner_iters += pre.iters;
    if (pre.status != Status::Ok) return finish(pre.x, y_tilde, t, pre.status);
    const Vector& x_pre = pre.x;

    const Vector y_t = g.set_y.project(y_tilde + eta * g.grad_y(x_pre, y_tilde));
    if (!is_finite(y_t)) return finish(x_pre, y_tilde, t, Status::NumericalFailure);
    const Vector y_tilde_next = y_t + theta * (y_t - y_prev);

    if (options.warm_start_inner) agd_start = x_t;
    if (options.hooks.on_inner_agd_start) options.hooks.on_inner_agd_start(t, 1, agd_start);
    AgdResult post = agd(inner_objective(y_t), g.set_x, agd_start, eps_tilde,
                          options.caps.agd_max_iters, options.caps.hard_cap);
    report.inner_iters += post.iters;
    if (post.status != Status::Ok) return finish(post.x, y_t, t, post.status);
    x_t = post.x;

    const double residual_sq =
        (y_t - g.set_y.project(y_t + eta * g.grad_y(x_t, y_t))).squaredNorm();
    if (!std::isfinite(residual_sq)) return finish(x_t, y_t, t, Status::NumericalFailure);
    if (residual_sq <= stop_sq) return finish(x_t, y_t, t, Status::Ok);
    if (t >= outer_cap) return finish(x_t, y_t, t, Status::BudgetExhausted);

    y_prev = y_t;
    y_tilde = y_tilde_next;
  }
}

}  // namespace minimax
