// Copyright 2026 Minimax Solvers Contributors
// Licensed under the Apache License, Version 2.0
#include "minimax/appa.hpp"

#include <cmath>

namespace minimax {

long long suggest_T(double kappa, double gap0_upper, double eps) {
  const double arg = std::max(gap0_upper / eps, std::exp(1.0));
  return static_cast<long long>(std::ceil(6.0 * std::sqrt(kappa) * std::log(arg)));
}

AppaResult inexact_appa(const std::function<double(const Vector&)>& g_value,
                        const ConstraintSet& set, const Vector& x0, double ell, double mu,
                        double eps, long long T, const ProxSolver& prox,
                        const std::function<void(long long, const Vector&)>& observer) {
  if (!(ell >= mu) || !(mu > 0.0)) throw std::invalid_argument("inexact_appa: need ell >= mu > 0");
  if (!(eps > 0.0)) throw std::invalid_argument("inexact_appa: eps must be positive");
  if (!is_finite(x0)) throw std::invalid_argument("inexact_appa: non-finite x0");
  (void)g_value;  // the iteration itself is value-free; kept for the operation contract

  const double kappa = ell / mu;
  const double delta = eps / ((10.0 * kappa) * (10.0 * kappa));
  const double theta = (2.0 * std::sqrt(kappa) - 1.0) / (2.0 * std::sqrt(kappa) + 1.0);

  AppaResult out;
  out.delta = delta;

  Vector x_prev = x0;
  Vector x_tilde = x0;
  Vector x_t = x0;
  for (long long t = 1; t <= T; ++t) {
    x_t = prox(x_tilde, ell, delta);
    if (!is_finite(x_t)) {
      out.status = Status::NumericalFailure;
      out.x = x_t;
      return out;
    }
    x_tilde = x_t + theta * (x_t - x_prev);
    x_prev = x_t;
    if (observer) observer(t, x_t);
  }
  out.x = x_t;
  return out;
}

}  // namespace minimax
