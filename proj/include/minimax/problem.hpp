// Copyright 2026 Minimax Solvers Contributors
// Licensed under the Apache License, Version 2.0
#pragma once

#include <functional>
#include <memory>
#include <optional>

#include "minimax/constraint_set.hpp"
#include "minimax/types.hpp"

namespace minimax {

// Smoothness and strong convexity/concavity constants of a minimax objective.
// mu_x / mu_y may be zero (merely convex / concave sides).
struct SmoothnessProfile {
  double ell = 0.0;
  double mu_x = 0.0;
  double mu_y = 0.0;
  std::optional<double> diam_x;
  std::optional<double> diam_y;

  double kappa_x() const { return ell / mu_x; }
  double kappa_y() const { return ell / mu_y; }

  void validate() const {
    if (!(ell > 0.0) || !std::isfinite(ell))
      throw std::invalid_argument("profile: ell must be positive and finite");
    if (mu_x < 0.0 || mu_y < 0.0) throw std::invalid_argument("profile: moduli must be >= 0");
    if (ell < mu_x || ell < mu_y)
      throw std::invalid_argument("profile: ell must dominate both moduli");
  }
};

// Optional closed-form data attached to test-suite problems. Evaluators return
// nullopt when the closed form does not apply at the query point (e.g. the
// inner argmax leaves the constraint set), letting callers fall back to a
// numerical inner solve.
struct SaddleReference {
  std::optional<Vector> x_star;
  std::optional<Vector> y_star;
  std::function<std::optional<double>(const Vector&)> phi;  // max_y f(x, .)
  std::function<std::optional<double>(const Vector&)> psi;  // min_x f(., y)
  std::function<std::optional<Vector>(const Vector&)> y_star_of;
  std::function<std::optional<Vector>(const Vector&)> x_star_of;
  std::optional<double> saddle_value;
  std::optional<double> phi_min;
};

// Tally of first-order oracle calls; one partial gradient = one count.
struct OracleCounter {
  long long grad_x_calls = 0;
  long long grad_y_calls = 0;
  long long value_calls = 0;

  long long gradient_total() const { return grad_x_calls + grad_y_calls; }
  void reset() { *this = OracleCounter{}; }
};

// A smooth minimax objective given through value/partial-gradient oracles.
struct MinimaxProblem {
  std::function<double(const Vector&, const Vector&)> value;
  std::function<Vector(const Vector&, const Vector&)> grad_x;
  std::function<Vector(const Vector&, const Vector&)> grad_y;
  ConstraintSet set_x;
  ConstraintSet set_y;
  SmoothnessProfile profile;
  std::shared_ptr<const SaddleReference> reference;  // may be null

  int dim_x() const { return set_x.dim(); }
  int dim_y() const { return set_y.dim(); }
};

// Wraps the problem's oracles so every call increments `counter` before
// delegating. The counter must outlive the returned problem and belongs to
// exactly one run.
MinimaxProblem counted(const MinimaxProblem& problem, OracleCounter& counter);

}  // namespace minimax
