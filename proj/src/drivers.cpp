// Copyright 2026 Minimax Solvers Contributors
// Licensed under the Apache License, Version 2.0
#include "minimax/drivers.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "minimax/agd.hpp"

namespace minimax {

namespace {

double required_diam_y(const MinimaxProblem& p, const char* who) {
  const auto d = p.set_y.diameter();
  if (!d) throw std::invalid_argument(std::string(who) + ": missing_diameter (set_y unbounded)");
  return *d;
}

double required_diam_x(const MinimaxProblem& p, const char* who) {
  const auto d = p.set_x.diameter();
  if (!d) throw std::invalid_argument(std::string(who) + ": missing_diameter (set_x unbounded)");
  return *d;
}

// f + cx ||x - x0||^2 - cy ||y - y0||^2 with analytically updated oracles and
// profile (moduli grow by twice the coefficients, ell by the larger growth).
MinimaxProblem add_quadratic_terms(const MinimaxProblem& base, double cx, const Vector& x0,
                                   double cy, const Vector& y0) {
  MinimaxProblem out = base;
  auto value = base.value;
  auto gx = base.grad_x;
  auto gy = base.grad_y;
  if (cx != 0.0) {
    out.value = [value, cx, x0](const Vector& x, const Vector& y) {
      return value(x, y) + cx * (x - x0).squaredNorm();
    };
    out.grad_x = [gx, cx, x0](const Vector& x, const Vector& y) -> Vector {
      return gx(x, y) + 2.0 * cx * (x - x0);
    };
  }
  if (cy != 0.0) {
    auto value2 = out.value;
    out.value = [value2, cy, y0](const Vector& x, const Vector& y) {
      return value2(x, y) - cy * (y - y0).squaredNorm();
    };
    out.grad_y = [gy, cy, y0](const Vector& x, const Vector& y) -> Vector {
      return gy(x, y) - 2.0 * cy * (y - y0);
    };
  }
  out.profile.mu_x += 2.0 * cx;
  out.profile.mu_y += 2.0 * cy;
  out.profile.ell += std::max(2.0 * cx, 2.0 * cy);
  out.reference = nullptr;
  return out;
}

// Rejection-sampled uniform integer in [1, n]; fixed generator (mt19937_64).
long long uniform_index(std::mt19937_64& rng, long long n) {
  const std::uint64_t span = static_cast<std::uint64_t>(n);
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return static_cast<long long>(v % span) + 1;
}

MinimaxProblem proximal_problem(const MinimaxProblem& f, double ell, const Vector& center) {
  MinimaxProblem g = f;
  auto value = f.value;
  auto gx = f.grad_x;
  g.value = [value, ell, center](const Vector& x, const Vector& y) {
    return value(x, y) + ell * (x - center).squaredNorm();
  };
  g.grad_x = [gx, ell, center](const Vector& x, const Vector& y) -> Vector {
    return gx(x, y) + 2.0 * ell * (x - center);
  };
  g.reference = nullptr;
  return g;
}

}  // namespace

MinimaxProblem reduce(const MinimaxProblem& base, const ReductionSpec& spec) {
  if (spec.eps < 0.0) throw std::invalid_argument("reduce: eps must be >= 0");
  switch (spec.kind) {
    case ReductionSpec::Kind::Scc: {
      const double dy = required_diam_y(base, "reduce(scc)");
      return add_quadratic_terms(base, 0.0, Vector(), spec.eps / (4.0 * dy * dy), spec.y0);
    }
    case ReductionSpec::Kind::Cc: {
      const double dx = required_diam_x(base, "reduce(cc)");
      const double dy = required_diam_y(base, "reduce(cc)");
      return add_quadratic_terms(base, spec.eps / (8.0 * dx * dx), spec.x0,
                                 spec.eps / (8.0 * dy * dy), spec.y0);
    }
    case ReductionSpec::Kind::Nc: {
      const double dy = required_diam_y(base, "reduce(nc)");
      return add_quadratic_terms(base, 0.0, Vector(), spec.eps / (4.0 * dy), spec.y0);
    }
    case ReductionSpec::Kind::NcMoreau: {
      const double dy = required_diam_y(base, "reduce(nc_moreau)");
      const double coeff = spec.eps * spec.eps / (200.0 * base.profile.ell * dy * dy);
      return add_quadratic_terms(base, 0.0, Vector(), coeff, spec.y0);
    }
  }
  throw std::invalid_argument("reduce: unknown kind");
}

SolverReport minimax_appa(const MinimaxProblem& f, const Vector& x0, const Vector& y0, double ell,
                          double mu_x, double mu_y, double eps, long long T,
                          const DriverOptions& options) {
  if (!(eps > 0.0)) throw std::invalid_argument("minimax_appa: eps must be positive");
  if (!(mu_x > 0.0) || !(mu_y > 0.0))
    throw std::invalid_argument("minimax_appa: need positive moduli");
  if (T < 0) throw std::invalid_argument("minimax_appa: T must be >= 0");
  required_diam_y(f, "minimax_appa");

  const double kappa_x = ell / mu_x;
  const double kappa_y = ell / mu_y;
  const double theta = (2.0 * std::sqrt(kappa_x) - 1.0) / (2.0 * std::sqrt(kappa_x) + 1.0);
  const double tenkk = 10.0 * kappa_x * kappa_y;
  const double delta_exp = options.mode == Mode::Practical ? 2.0 : 4.0;

  SolverReport report;
  const double delta = clamp_value_tol(report.ledger, "minimax_appa.delta",
                                       eps / std::pow(tenkk, delta_exp), eps);
  const double eps_tilde = clamp_value_tol(report.ledger, "minimax_appa.eps_tilde",
                                           eps / (100.0 * kappa_x * kappa_y), eps);

  MaximinOptions inner;
  inner.mode = options.mode;
  inner.caps = options.caps;
  inner.hooks = options.maximin_hooks;

  Vector x_prev = x0;
  Vector x_tilde = x0;
  Vector x_t = x0;
  for (long long t = 1; t <= T; ++t) {
    const MinimaxProblem g_t = proximal_problem(f, ell, x_tilde);
    const SolverReport step =
        maximin_ag2(g_t, x0, y0, 3.0 * ell, 2.0 * ell, mu_y, delta, inner);
    report.absorb(step);
    x_t = step.x;
    report.outer_iters = t;
    if (options.observer) options.observer(t, x_t);
    if (step.status != Status::Ok) {
      report.x = x_t;
      report.y = step.y;
      return report;
    }
    x_tilde = x_t + theta * (x_t - x_prev);
    x_prev = x_t;
  }

  ScalarObjective neg_f_y;
  neg_f_y.grad = [&f, &x_t](const Vector& y) -> Vector { return -f.grad_y(x_t, y); };
  neg_f_y.ell = ell;
  neg_f_y.mu = mu_y;
  const AgdResult ascent =
      agd(neg_f_y, f.set_y, y0, eps_tilde, options.caps.agd_max_iters, options.caps.hard_cap);
  report.inner_iters += ascent.iters;
  if (ascent.status != Status::Ok && report.status == Status::Ok) report.status = ascent.status;
  const Vector y_tilde = ascent.x;
  const Vector y_T =
      f.set_y.project(y_tilde + f.grad_y(x_t, y_tilde) / (2.0 * kappa_x * ell));
  report.x = x_t;
  report.y = y_T;
  if (!is_finite(x_t) || !is_finite(y_T)) report.status = Status::NumericalFailure;
  return report;
}

SolverReport scc_solve(const MinimaxProblem& f, const Vector& x0, const Vector& y0, double ell,
                       double mu_x, double eps, long long T, const DriverOptions& options) {
  if (!(eps > 0.0)) throw std::invalid_argument("scc_solve: eps must be positive");
  const double dy = required_diam_y(f, "scc_solve");
  ReductionSpec spec;
  spec.kind = ReductionSpec::Kind::Scc;
  spec.eps = eps;
  spec.y0 = y0;
  const MinimaxProblem reduced = reduce(f, spec);
  return minimax_appa(reduced, x0, y0, ell, mu_x, eps / (4.0 * dy * dy), eps / 2.0, T, options);
}

SolverReport cc_solve(const MinimaxProblem& f, const Vector& x0, const Vector& y0, double ell,
                      double eps, long long T, const DriverOptions& options) {
  if (!(eps > 0.0)) throw std::invalid_argument("cc_solve: eps must be positive");
  const double dx = required_diam_x(f, "cc_solve");
  const double dy = required_diam_y(f, "cc_solve");
  ReductionSpec spec;
  spec.kind = ReductionSpec::Kind::Cc;
  spec.eps = eps;
  spec.x0 = x0;
  spec.y0 = y0;
  const MinimaxProblem reduced = reduce(f, spec);
  return minimax_appa(reduced, x0, y0, ell, eps / (4.0 * dx * dx), eps / (4.0 * dy * dy),
                      eps / 2.0, T, options);
}

SolverReport minimax_ppa(const MinimaxProblem& f, const Vector& x0, const Vector& y0, double ell,
                         double mu_y, double eps, long long T, std::uint64_t seed,
                         const DriverOptions& options) {
  if (!(eps > 0.0)) throw std::invalid_argument("minimax_ppa: eps must be positive");
  if (!(mu_y > 0.0)) throw std::invalid_argument("minimax_ppa: mu_y must be positive");
  if (T < 1) throw std::invalid_argument("minimax_ppa: T must be >= 1");
  const double dy = required_diam_y(f, "minimax_ppa");

  const double kappa_y = ell / mu_y;
  const double delta_exp = options.mode == Mode::Practical ? 2.0 : 4.0;
  SolverReport report;
  report.seed = seed;
  const double ratio = eps / (ell * dy);
  const double delta =
      clamp_value_tol(report.ledger, "minimax_ppa.delta",
                      eps * eps / (std::pow(10.0 * kappa_y, delta_exp) * ell) * ratio * ratio,
                      eps);

  MaximinOptions inner;
  inner.mode = options.mode;
  inner.caps = options.caps;
  inner.hooks = options.maximin_hooks;

  std::vector<Vector> iterates;
  iterates.reserve(static_cast<std::size_t>(T));
  Vector center = x0;
  for (long long t = 1; t <= T; ++t) {
    const MinimaxProblem g_t = proximal_problem(f, ell, center);
    const SolverReport step = maximin_ag2(g_t, x0, y0, 3.0 * ell, ell, mu_y, delta, inner);
    report.absorb(step);
    report.outer_iters = t;
    if (options.observer) options.observer(t, step.x);
    if (step.status != Status::Ok) {
      report.x = step.x;
      report.y = step.y;
      return report;
    }
    iterates.push_back(step.x);
    center = step.x;
  }

  std::mt19937_64 rng(seed);
  const long long s = uniform_index(rng, T);
  report.picked_index = s;
  const Vector& x_s = iterates[static_cast<std::size_t>(s - 1)];

  ScalarObjective neg_f_y;
  neg_f_y.grad = [&f, &x_s](const Vector& y) -> Vector { return -f.grad_y(x_s, y); };
  neg_f_y.ell = ell;
  neg_f_y.mu = mu_y;
  const AgdResult ascent =
      agd(neg_f_y, f.set_y, y0, delta, options.caps.agd_max_iters, options.caps.hard_cap);
  report.inner_iters += ascent.iters;
  if (ascent.status != Status::Ok) report.status = ascent.status;
  report.x = x_s;
  report.y = ascent.x;
  return report;
}

SolverReport nc_solve(const MinimaxProblem& f, const Vector& x0, const Vector& y0, double ell,
                      double eps, long long T, std::uint64_t seed, const DriverOptions& options) {
  if (!(eps > 0.0)) throw std::invalid_argument("nc_solve: eps must be positive");
  const double dy = required_diam_y(f, "nc_solve");
  ReductionSpec spec;
  spec.kind = ReductionSpec::Kind::Nc;
  spec.eps = eps;
  spec.y0 = y0;
  const MinimaxProblem reduced = reduce(f, spec);
  return minimax_ppa(reduced, x0, y0, ell, eps / (2.0 * dy), eps / 2.0, T, seed, options);
}

SolverReport nc_moreau_solve(const MinimaxProblem& f, const Vector& x0, const Vector& y0,
                             double ell, double eps, long long T, std::uint64_t seed,
                             const DriverOptions& options) {
  if (!(eps > 0.0)) throw std::invalid_argument("nc_moreau_solve: eps must be positive");
  const double dy = required_diam_y(f, "nc_moreau_solve");
  ReductionSpec spec;
  spec.kind = ReductionSpec::Kind::NcMoreau;
  spec.eps = eps;
  spec.y0 = y0;
  const MinimaxProblem reduced = reduce(f, spec);
  return minimax_ppa(reduced, x0, y0, ell, eps * eps / (100.0 * ell * dy * dy), eps / 10.0, T,
                     seed, options);
}

long long suggest_T_ppa(double ell, double delta_phi_upper, double eps) {
  return static_cast<long long>(std::ceil(8.0 * ell * delta_phi_upper / (eps * eps))) + 1;
}

}  // namespace minimax
