// Copyright 2026 Minimax Solvers Contributors
// Licensed under the Apache License, Version 2.0
#include "minimax/agd.hpp"

#include <cmath>
#include <limits>

namespace minimax {

long long agd_suggested_bound(double kappa, double ell, double dist0_sq, double eps) {
  const double arg = std::max(kappa * kappa * kappa * ell * dist0_sq / eps, std::exp(1.0));
  return static_cast<long long>(std::ceil(10.0 * std::sqrt(kappa) * std::log(arg))) + 10;
}

AgdResult agd(const ScalarObjective& obj, const ConstraintSet& set, const Vector& x0, double eps,
              long long max_iter_cap, long long hard_cap) {
  if (!(eps > 0.0)) throw std::invalid_argument("agd: eps must be positive");
  if (!(obj.ell > 0.0) || !(obj.mu > 0.0) || obj.ell < obj.mu)
    throw std::invalid_argument("agd: need ell >= mu > 0");
  if (!is_finite(x0)) throw std::invalid_argument("agd: non-finite x0");

  const double ell = obj.ell;
  const double mu = obj.mu;
  const double kappa = ell / mu;
  const double eta = 1.0 / ell;

  AgdResult out;

  // ell == mu: one projected gradient step is exact; return its image.
  if (kappa <= 1.0 + 1e-9) {
    const Vector x1 = set.project(x0 - eta * obj.grad(x0));
    Vector g1 = obj.grad(x1);
    out.grad_calls = 2;
    if (!is_finite(x1) || !is_finite(g1)) {
      out.status = Status::NumericalFailure;
      out.x = x1;
      out.iters = 1;
      return out;
    }
    out.x = set.project(x1 - eta * g1);
    out.iters = 1;
    out.residual_sq = (x1 - out.x).squaredNorm();
    return out;
  }

  const double threshold = eps / (2.0 * kappa * kappa * (ell - mu));
  const double theta = (std::sqrt(kappa) - 1.0) / (std::sqrt(kappa) + 1.0);

  Vector x_prev = x0;
  Vector x_tilde = x0;

  long long cap = max_iter_cap;
  double best_res_sq = std::numeric_limits<double>::infinity();
  Vector best_image;

  for (long long t = 1;; ++t) {
    const Vector g_tilde = obj.grad(x_tilde);
    ++out.grad_calls;
    if (!is_finite(g_tilde)) {
      out.status = Status::NumericalFailure;
      out.x = x_tilde;
      out.iters = t;
      return out;
    }
    if (t == 1 && cap == 0) {
      // g_tilde is grad(x0) here; for unbounded sets, strong monotonicity gives
      // ||x0 - x*|| <= 2 ||grad(x0)|| / mu as a distance estimate.
      double dist0_sq;
      if (auto d = set.diameter()) {
        dist0_sq = (*d) * (*d);
      } else {
        const double est = 2.0 * g_tilde.norm() / mu;
        dist0_sq = std::max(est * est, 1e-12);
      }
      cap = agd_suggested_bound(kappa, ell, dist0_sq, eps);
    }
    if (cap > hard_cap) cap = hard_cap;

    const Vector x_t = set.project(x_tilde - eta * g_tilde);
    const Vector g_t = obj.grad(x_t);
    ++out.grad_calls;
    const Vector image = set.project(x_t - eta * g_t);
    if (!is_finite(x_t) || !is_finite(g_t) || !is_finite(image)) {
      out.status = Status::NumericalFailure;
      out.x = x_t;
      out.iters = t;
      return out;
    }
    const double res_sq = (x_t - image).squaredNorm();
    if (res_sq < best_res_sq) {
      best_res_sq = res_sq;
      best_image = image;
    }
    if (res_sq <= threshold) {
      out.x = image;
      out.iters = t;
      out.residual_sq = res_sq;
      return out;
    }
    if (t >= cap) {
      out.x = best_image;
      out.iters = t;
      out.residual_sq = best_res_sq;
      out.status = Status::BudgetExhausted;
      return out;
    }
    x_tilde = x_t + theta * (x_t - x_prev);
    x_prev = x_t;
  }
}

}  // namespace minimax
