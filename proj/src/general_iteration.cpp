// Copyright 2026 Minimax Solvers Contributors
// Licensed under the Apache License, Version 2.0
#include "minimax/general_iteration.hpp"

#include <cmath>
#include <random>
#include <vector>

namespace minimax {

namespace {

double required_diam_y(const MinimaxProblem& p, const char* who) {
  const auto d = p.set_y.diameter();
  if (!d) throw std::invalid_argument(std::string(who) + ": missing_diameter (set_y unbounded)");
  return *d;
}

long long uniform_index(std::mt19937_64& rng, long long n) {
  const std::uint64_t span = static_cast<std::uint64_t>(n);
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return static_cast<long long>(v % span);  // 0-based offset
}

struct FixedPointResult {
  Vector x;
  long long applications = 0;
  Status status = Status::Ok;
};

// x <- P_X(x_bar - grad_x f(x, z) / (2 ell)) until the pre-assignment residual
// of the fresh application drops below tol. Contraction factor 1/2 justifies
// the log2 cap.
FixedPointResult fixed_point_solve(const MinimaxProblem& f, const Vector& x_bar, const Vector& z,
                                   const Vector& start, double ell, double tol,
                                   long long hard_cap) {
  FixedPointResult out;
  Vector x = start;
  long long cap = hard_cap;
  for (long long k = 1;; ++k) {
    const Vector next = f.set_x.project(x_bar - f.grad_x(x, z) / (2.0 * ell));
    ++out.applications;
    if (!is_finite(next)) {
      out.status = Status::NumericalFailure;
      out.x = next;
      return out;
    }
    const double res = (x - next).norm();
    x = next;
    if (res <= tol) break;
    if (k == 1) {
      const long long suggested =
          static_cast<long long>(std::ceil(std::log2(std::max(res / tol, 2.0)))) + 64;
      cap = std::min(hard_cap, suggested);
    }
    if (k >= cap) {
      out.status = Status::BudgetExhausted;
      out.x = x;
      return out;
    }
  }
  out.x = x;
  return out;
}

long long outer_cap_default(const Caps& caps, double kappa_bar, double ell, double diam,
                            double eps) {
  if (caps.max_outer > 0) return std::min(caps.max_outer, caps.hard_cap);
  const long long cap = static_cast<long long>(std::ceil(
      20.0 * std::sqrt(kappa_bar) * std::log(ell * diam * diam / eps + std::exp(1.0))));
  return std::min(std::max(cap, static_cast<long long>(16)), caps.hard_cap);
}

}  // namespace

MinimaxProblem make_f_eta(const MinimaxProblem& f, double eta, const Vector& y0) {
  if (!(eta > 0.0)) throw std::invalid_argument("make_f_eta: eta must be positive");
  const double D = required_diam_y(f, "make_f_eta");
  const double coeff = eta / (2.0 * D * D);
  MinimaxProblem out = f;
  auto value = f.value;
  auto gy = f.grad_y;
  out.value = [value, coeff, y0](const Vector& x, const Vector& y) {
    return value(x, y) - coeff * (y - y0).squaredNorm();
  };
  out.grad_y = [gy, coeff, y0](const Vector& x, const Vector& y) -> Vector {
    return gy(x, y) - 2.0 * coeff * (y - y0);
  };
  out.profile.mu_y += 2.0 * coeff;
  out.profile.ell += 2.0 * coeff;
  out.reference = nullptr;
  return out;
}

SolverReport g1(const MinimaxProblem& f, const Vector& x_bar, const Vector& x0, double eps_bar,
                const GIterOptions& options) {
  if (!(eps_bar > 0.0)) throw std::invalid_argument("g1: eps_bar must be positive");
  const double ell = f.profile.ell;
  const double mu_bar = f.profile.mu_y;
  if (!(mu_bar > 0.0)) throw std::invalid_argument("g1: requires strong concavity in y");
  const double D = required_diam_y(f, "g1");
  const double kappa_bar = ell / mu_bar;

  SolverReport report;
  const double tol1_raw =
      std::min(1.0, eps_bar / (5971968.0 * std::pow(kappa_bar, 4.5) * ell * D));
  const double tol1 = clamp_length_tol(report.ledger, "g1.fixed_point_tol", tol1_raw,
                                       eps_bar, ell);
  const double scale = std::sqrt(eps_bar / (2.0 * kappa_bar * ell));
  const double tol2 =
      clamp_length_tol(report.ledger, "g1.second_loop_tol", scale / (36.0 * kappa_bar), eps_bar,
                       ell);
  const double stop_tol =
      clamp_length_tol(report.ledger, "g1.stop_tol", scale / (48.0 * kappa_bar), eps_bar, ell);

  const double theta = (2.0 * std::sqrt(kappa_bar) - 1.0) / (2.0 * std::sqrt(kappa_bar) + 1.0);
  const long long cap = outer_cap_default(options.caps, kappa_bar, ell, D, eps_bar);

  Vector y = options.y_start ? *options.y_start : f.set_y.feasible_point();
  Vector z = y;
  Vector x_k = x0;

  auto finish = [&](Status status) {
    report.status = status;
    report.x = x_k;
    report.y = y;
    return report;
  };

  for (long long k = 1;; ++k) {
    const FixedPointResult pre =
        fixed_point_solve(f, x_bar, z, x0, ell, tol1, options.caps.hard_cap);
    report.inner_iters += pre.applications;
    if (pre.status != Status::Ok) return finish(pre.status);

    const Vector y_next = f.set_y.project(z + f.grad_y(pre.x, z) / (4.0 * ell));
    if (!is_finite(y_next)) return finish(Status::NumericalFailure);
    const Vector z_next = y_next + theta * (y_next - y);

    const FixedPointResult post =
        fixed_point_solve(f, x_bar, y_next, x0, ell, tol2, options.caps.hard_cap);
    report.inner_iters += post.applications;
    if (post.status != Status::Ok) return finish(post.status);

    x_k = post.x;
    y = y_next;
    z = z_next;
    report.outer_iters = k;

    const double residual =
        (y - f.set_y.project(y + f.grad_y(x_k, y) / (4.0 * ell))).norm();
    if (!std::isfinite(residual)) return finish(Status::NumericalFailure);
    if (residual <= stop_tol) return finish(Status::Ok);
    if (k >= cap) return finish(Status::BudgetExhausted);
  }
}

SolverReport g2(const MinimaxProblem& f, const Vector& x_tilde, double eps_tilde,
                const GIterOptions& options) {
  if (!(eps_tilde > 0.0)) throw std::invalid_argument("g2: eps_tilde must be positive");
  const double ell = f.profile.ell;
  const double mu_bar = f.profile.mu_y;
  if (!(mu_bar > 0.0)) throw std::invalid_argument("g2: requires strong concavity in y");
  const double D = required_diam_y(f, "g2");
  const double kappa_bar = ell / mu_bar;

  SolverReport report;
  const double stop_tol =
      clamp_length_tol(report.ledger, "g2.stop_tol",
                       std::sqrt(eps_tilde / (2.0 * ell)) / kappa_bar, eps_tilde, ell);
  const double theta = (std::sqrt(kappa_bar) - 1.0) / (std::sqrt(kappa_bar) + 1.0);
  const long long cap = outer_cap_default(options.caps, kappa_bar, ell, D, eps_tilde);

  Vector y = options.y_start ? *options.y_start : f.set_y.feasible_point();
  Vector z = y;

  auto finish = [&](Status status) {
    report.status = status;
    report.y = y;
    return report;
  };

  for (long long k = 1;; ++k) {
    const Vector y_next = f.set_y.project(z + f.grad_y(x_tilde, z) / ell);
    if (!is_finite(y_next)) return finish(Status::NumericalFailure);
    z = y_next + theta * (y_next - y);
    y = y_next;
    report.outer_iters = k;

    const double residual = (y - f.set_y.project(y + f.grad_y(x_tilde, y) / ell)).norm();
    if (!std::isfinite(residual)) return finish(Status::NumericalFailure);
    if (residual <= stop_tol) return finish(Status::Ok);
    if (k >= cap) return finish(Status::BudgetExhausted);
  }
}

SolverReport scsc_near_optimal(const MinimaxProblem& f, const Vector& x0, double eps, long long T,
                               const NearOptimalOptions& options) {
  if (!(eps > 0.0)) throw std::invalid_argument("scsc_near_optimal: eps must be positive");
  const double ell = f.profile.ell;
  const double mu = f.profile.mu_x;
  const double mu_bar = f.profile.mu_y;
  if (!(mu > 0.0) || !(mu_bar > 0.0))
    throw std::invalid_argument("scsc_near_optimal: requires both moduli positive");
  required_diam_y(f, "scsc_near_optimal");
  const double kappa = ell / mu;
  const double kappa_bar = ell / mu_bar;

  SolverReport report;
  const double eps_bar =
      clamp_value_tol(report.ledger, "scsc.eps_bar",
                      eps * ell / (576.0 * std::pow(kappa, 2.5) * std::pow(kappa_bar, 3.0)), eps);
  const double eps_tilde =
      clamp_value_tol(report.ledger, "scsc.eps_tilde", eps * ell / (8.0 * kappa_bar), eps);

  const double theta1 = (2.0 * std::sqrt(kappa) - 1.0) / (2.0 * std::sqrt(kappa) + 1.0);
  const double theta2 = 1.0 / (2.0 * std::sqrt(kappa) + 4.0 * kappa);

  GIterOptions giter;
  giter.caps = options.caps;
  giter.y_start = options.y_start;

  Vector x_prev = x0;
  Vector x_tilde = x0;
  Vector x_t = x0;
  Vector y_t;
  for (long long t = 0; t <= T; ++t) {
    const SolverReport step = g1(f, x_tilde, x0, eps_bar, giter);
    report.absorb(step);
    const Vector x_next = step.x;
    if (step.status != Status::Ok) {
      report.x = x_next;
      report.y = step.y;
      report.outer_iters = t + 1;
      return report;
    }
    x_tilde = x_next + theta1 * (x_next - x_prev) + theta2 * (x_next - x_tilde);
    x_prev = x_t = x_next;

    const SolverReport ascent = g2(f, x_next, eps_tilde, giter);
    report.absorb(ascent);
    y_t = *ascent.y;
    if (ascent.status != Status::Ok) {
      report.x = x_next;
      report.y = y_t;
      report.outer_iters = t + 1;
      return report;
    }
    report.outer_iters = t + 1;
  }
  report.x = x_t;
  report.y = y_t;
  return report;
}

SolverReport scc_near_optimal(const MinimaxProblem& f, const Vector& x0, const Vector& y0,
                              double eps, long long T, const NearOptimalOptions& options) {
  if (!(eps > 0.0)) throw std::invalid_argument("scc_near_optimal: eps must be positive");
  const double ell = f.profile.ell;
  const double mu = f.profile.mu_x;
  if (!(mu > 0.0)) throw std::invalid_argument("scc_near_optimal: requires mu_x > 0");
  const double D = required_diam_y(f, "scc_near_optimal");
  const double kappa = ell / mu;
  const double ld2 = ell * D * D;
  const double shrink = std::min(1.0 / kappa, eps / ld2);

  SolverReport report;
  const double eps_bar = clamp_value_tol(
      report.ledger, "scc.eps_bar",
      std::pow(eps, 4.0) / (73328.0 * std::pow(kappa, 2.5) * std::pow(ld2, 3.0)) * shrink, eps);
  const double eps_tilde = clamp_value_tol(report.ledger, "scc.eps_tilde",
                                           eps * eps / (64.0 * ld2) * shrink, eps);

  const double root = std::sqrt(2.0 * kappa);
  const double theta1 = (2.0 * root - 1.0) / (2.0 * root + 1.0);
  const double theta2 = 1.0 / (2.0 * root + 8.0 * kappa);

  // Printed reading: one f_eps for both sub-solvers at the printed tolerances.
  // The proposition pattern (f_{eps_bar} at eps_bar/2 etc.) is selectable but
  // its regularized condition number ell D^2 / eps_bar is typically enormous.
  const MinimaxProblem f_g1 = options.proposition_regularizer ? make_f_eta(f, eps_bar, y0)
                                                              : make_f_eta(f, eps, y0);
  const MinimaxProblem f_g2 = options.proposition_regularizer ? make_f_eta(f, eps_tilde, y0)
                                                              : make_f_eta(f, eps, y0);
  const double g1_tol = options.proposition_regularizer ? eps_bar / 2.0 : eps_bar;
  const double g2_tol = options.proposition_regularizer ? eps_tilde / 2.0 : eps_tilde;

  GIterOptions giter;
  giter.caps = options.caps;
  giter.y_start = options.y_start ? options.y_start : std::optional<Vector>(y0);

  Vector x_prev = x0;
  Vector x_tilde = x0;
  Vector x_t = x0;
  Vector y_t;
  for (long long t = 0; t <= T; ++t) {
    const SolverReport step = g1(f_g1, x_tilde, x0, g1_tol, giter);
    report.absorb(step);
    const Vector x_next = step.x;
    if (step.status != Status::Ok) {
      report.x = x_next;
      report.y = step.y;
      report.outer_iters = t + 1;
      return report;
    }
    x_tilde = x_next + theta1 * (x_next - x_prev) + theta2 * (x_next - x_tilde);
    x_prev = x_t = x_next;

    const SolverReport ascent = g2(f_g2, x_next, g2_tol, giter);
    report.absorb(ascent);
    y_t = *ascent.y;
    if (ascent.status != Status::Ok) {
      report.x = x_next;
      report.y = y_t;
      report.outer_iters = t + 1;
      return report;
    }
    report.outer_iters = t + 1;
  }
  report.x = x_t;
  report.y = y_t;
  return report;
}

SolverReport nsc_accelerated(const MinimaxProblem& f, const Vector& x0, double eps, long long T,
                             std::uint64_t seed, const NearOptimalOptions& options) {
  if (!(eps > 0.0)) throw std::invalid_argument("nsc_accelerated: eps must be positive");
  if (T < 1) throw std::invalid_argument("nsc_accelerated: T must be >= 1");
  const double ell = f.profile.ell;
  const double mu_bar = f.profile.mu_y;
  if (!(mu_bar > 0.0)) throw std::invalid_argument("nsc_accelerated: requires mu_y > 0");
  required_diam_y(f, "nsc_accelerated");
  const double kappa_bar = ell / mu_bar;

  SolverReport report;
  report.seed = seed;
  const double eps_bar = clamp_value_tol(report.ledger, "nsc.eps_bar",
                                         eps * eps / (144.0 * kappa_bar * kappa_bar * ell), eps);

  GIterOptions giter;
  giter.caps = options.caps;
  giter.y_start = options.y_start;

  std::vector<Vector> iterates;  // x_0 .. x_{T-1} are candidates
  iterates.push_back(x0);
  Vector x_t = x0;
  for (long long t = 0; t <= T; ++t) {
    const SolverReport step = g1(f, x_t, x0, eps_bar, giter);
    report.absorb(step);
    report.outer_iters = t + 1;
    if (step.status != Status::Ok) {
      report.x = step.x;
      report.y = step.y;
      return report;
    }
    x_t = step.x;
    if (t + 1 <= T - 1) iterates.push_back(x_t);
  }

  std::mt19937_64 rng(seed);
  const long long pick = uniform_index(rng, static_cast<long long>(iterates.size()));
  report.picked_index = pick;
  report.x = iterates[static_cast<std::size_t>(pick)];
  return report;
}

SolverReport nc_accelerated(const MinimaxProblem& f, const Vector& x0, const Vector& y0,
                            double eps, long long T, std::uint64_t seed,
                            const NearOptimalOptions& options) {
  if (!(eps > 0.0)) throw std::invalid_argument("nc_accelerated: eps must be positive");
  if (T < 0) throw std::invalid_argument("nc_accelerated: T must be >= 0");
  const double ell = f.profile.ell;
  required_diam_y(f, "nc_accelerated");

  SolverReport report;
  report.seed = seed;
  const double eps_bar =
      clamp_value_tol(report.ledger, "nc.eps_bar", eps * eps / (48.0 * ell), eps);
  const MinimaxProblem f_reg = make_f_eta(f, eps_bar, y0);

  GIterOptions giter;
  giter.caps = options.caps;
  giter.y_start = options.y_start ? options.y_start : std::optional<Vector>(y0);

  std::vector<Vector> iterates;  // x_1 .. x_{T+1} are candidates
  Vector x_t = x0;
  for (long long t = 0; t <= T; ++t) {
    const SolverReport step = g1(f_reg, x_t, x0, eps_bar / 2.0, giter);
    report.absorb(step);
    report.outer_iters = t + 1;
    if (step.status != Status::Ok) {
      report.x = step.x;
      report.y = step.y;
      return report;
    }
    x_t = step.x;
    iterates.push_back(x_t);
  }

  std::mt19937_64 rng(seed);
  const long long pick = uniform_index(rng, static_cast<long long>(iterates.size()));
  report.picked_index = pick;
  report.x = iterates[static_cast<std::size_t>(pick)];
  return report;
}

}  // namespace minimax
