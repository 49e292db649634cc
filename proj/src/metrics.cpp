// Copyright 2026 Minimax Solvers Contributors
// Licensed under the Apache License, Version 2.0
#include "minimax/metrics.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "minimax/agd.hpp"
#include "minimax/maximin_ag2.hpp"

namespace minimax {

namespace {

struct InnerOpt {
  double value = 0.0;
  double error = 0.0;
  Certificate::Method method = Certificate::Method::ClosedForm;
};

std::pair<Vector, Vector> grid_bounds(const ConstraintSet& set, double whole_space_box,
                                      const Vector& around) {
  return std::visit(
      [&](const auto& s) -> std::pair<Vector, Vector> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, ConstraintSet::WholeSpace>) {
          return {around - Vector::Constant(s.dim, whole_space_box),
                  around + Vector::Constant(s.dim, whole_space_box)};
        } else if constexpr (std::is_same_v<T, ConstraintSet::Box>) {
          return {s.lower, s.upper};
        } else if constexpr (std::is_same_v<T, ConstraintSet::Ball>) {
          return {s.center - Vector::Constant(s.center.size(), s.radius),
                  s.center + Vector::Constant(s.center.size(), s.radius)};
        } else {
          return {Vector::Zero(s.dim), Vector::Ones(s.dim)};
        }
      },
      set.data());
}

// Visits the projection of every node of a tensor grid over the set's bounding
// box; the projected grid covers the set within half a grid diagonal.
void for_each_grid_point(const ConstraintSet& set, int grid_per_dim, double whole_space_box,
                         const Vector& around,
                         const std::function<void(const Vector&)>& visit) {
  const int d = set.dim();
  auto [lo, hi] = grid_bounds(set, whole_space_box, around);
  std::vector<int> idx(d, 0);
  Vector p(d);
  while (true) {
    for (int k = 0; k < d; ++k)
      p[k] = grid_per_dim == 1 ? 0.5 * (lo[k] + hi[k])
                               : lo[k] + (hi[k] - lo[k]) * idx[k] / (grid_per_dim - 1);
    visit(set.project(p));
    int k = 0;
    for (; k < d; ++k) {
      if (++idx[k] < grid_per_dim) break;
      idx[k] = 0;
    }
    if (k == d) break;
  }
}

double grid_spacing(const ConstraintSet& set, int grid_per_dim, double whole_space_box,
                    const Vector& around) {
  if (grid_per_dim <= 1) return std::numeric_limits<double>::infinity();
  auto [lo, hi] = grid_bounds(set, whole_space_box, around);
  return (hi - lo).norm() / (grid_per_dim - 1);
}

// max_y f(x_hat, .) approximately: closed form, AGD ascent, or grid.
InnerOpt inner_max_y(const MinimaxProblem& p, const Vector& x_hat, double inner_tol) {
  if (p.reference && p.reference->phi) {
    if (auto v = p.reference->phi(x_hat)) return {*v, 0.0, Certificate::Method::ClosedForm};
  }
  if (p.profile.mu_y > 0.0) {
    ScalarObjective neg;
    neg.grad = [&p, &x_hat](const Vector& y) -> Vector { return -p.grad_y(x_hat, y); };
    neg.ell = p.profile.ell;
    neg.mu = p.profile.mu_y;
    const AgdResult r = agd(neg, p.set_y, p.set_y.feasible_point(), inner_tol);
    if (r.status == Status::Ok)
      return {p.value(x_hat, r.x), inner_tol, Certificate::Method::InnerSolver};
  }
  if (p.dim_y() <= 3 && p.set_y.is_bounded()) {
    const int g = 257;
    double best = -std::numeric_limits<double>::infinity();
    for_each_grid_point(p.set_y, g, 10.0, p.set_y.feasible_point(), [&](const Vector& y) {
      best = std::max(best, p.value(x_hat, y));
    });
    const double err =
        p.profile.ell * grid_spacing(p.set_y, g, 10.0, p.set_y.feasible_point());
    return {best, err, Certificate::Method::Grid};
  }
  throw UncertifiableError("duality_gap: no method for the inner maximization");
}

InnerOpt inner_min_x(const MinimaxProblem& p, const Vector& y_hat, double inner_tol) {
  if (p.reference && p.reference->psi) {
    if (auto v = p.reference->psi(y_hat)) return {*v, 0.0, Certificate::Method::ClosedForm};
  }
  if (p.profile.mu_x > 0.0) {
    ScalarObjective obj;
    obj.grad = [&p, &y_hat](const Vector& x) -> Vector { return p.grad_x(x, y_hat); };
    obj.ell = p.profile.ell;
    obj.mu = p.profile.mu_x;
    const AgdResult r = agd(obj, p.set_x, p.set_x.feasible_point(), inner_tol);
    if (r.status == Status::Ok)
      return {p.value(r.x, y_hat), inner_tol, Certificate::Method::InnerSolver};
  }
  if (p.dim_x() <= 3 && p.set_x.is_bounded()) {
    const int g = 257;
    double best = std::numeric_limits<double>::infinity();
    for_each_grid_point(p.set_x, g, 10.0, p.set_x.feasible_point(), [&](const Vector& x) {
      best = std::min(best, p.value(x, y_hat));
    });
    const double err =
        p.profile.ell * grid_spacing(p.set_x, g, 10.0, p.set_x.feasible_point());
    return {best, err, Certificate::Method::Grid};
  }
  throw UncertifiableError("duality_gap: no method for the inner minimization");
}

Certificate::Method worse(Certificate::Method a, Certificate::Method b) {
  return static_cast<int>(a) >= static_cast<int>(b) ? a : b;
}

Certificate moreau_from_prox(const Vector& x_hat, const Vector& prox, double ell,
                             double dist_err, double inner_tol, Certificate::Method method) {
  Certificate cert;
  cert.kind = Certificate::Kind::MoreauGrad;
  cert.value = 2.0 * ell * (x_hat - prox).norm();
  cert.error_bound = 2.0 * ell * dist_err;
  cert.inner_tol = inner_tol;
  cert.method = method;
  return cert;
}

// Solves the Moreau prox subproblem of the minimax Phi and returns the prox
// point together with a distance error bound.
std::pair<Vector, double> minimax_prox(const MinimaxProblem& p, const Vector& x_hat, double ell,
                                       double inner_tol) {
  MinimaxProblem g = p;
  const double ell_f = p.profile.ell;
  auto base_value = p.value;
  auto base_gx = p.grad_x;
  g.value = [base_value, x_hat, ell](const Vector& w, const Vector& y) {
    return base_value(w, y) + ell * (w - x_hat).squaredNorm();
  };
  g.grad_x = [base_gx, x_hat, ell](const Vector& w, const Vector& y) -> Vector {
    return base_gx(w, y) + 2.0 * ell * (w - x_hat);
  };
  g.reference = nullptr;
  double mu_y = p.profile.mu_y;
  if (mu_y <= 0.0) {
    // Tiny strong-concavity lift so the subproblem is SCSC; shifts the value
    // of the inner max by at most inner_tol.
    const auto dy = p.set_y.diameter();
    if (!dy) throw UncertifiableError("moreau_grad_norm: unbounded Y with mu_y = 0");
    const double coeff = inner_tol / ((*dy) * (*dy));
    const Vector y0 = p.set_y.feasible_point();
    auto gv = g.value;
    auto ggy = g.grad_y;
    g.value = [gv, coeff, y0](const Vector& w, const Vector& y) {
      return gv(w, y) - coeff * (y - y0).squaredNorm();
    };
    g.grad_y = [ggy, coeff, y0](const Vector& w, const Vector& y) -> Vector {
      return ggy(w, y) - 2.0 * coeff * (y - y0);
    };
    mu_y = 2.0 * coeff;
  }
  const double mu_w = 2.0 * ell - ell_f;
  if (!(mu_w > 0.0))
    throw UncertifiableError("moreau_grad_norm: ell too small for a strongly convex prox");
  const double ell_g = ell_f + 2.0 * ell;

  MaximinOptions opt;
  opt.mode = Mode::Practical;
  const SolverReport rep =
      maximin_ag2(g, x_hat, p.set_y.feasible_point(), ell_g, mu_w, std::min(mu_y, ell_g),
                  std::max(inner_tol, 1e-14), opt);
  if (rep.status != Status::Ok && rep.status != Status::BudgetExhausted)
    throw UncertifiableError("moreau_grad_norm: prox subproblem solve failed");
  // Value accuracy inner_tol (plus the regularization shift) converts to a
  // distance bound through the prox objective's strong convexity.
  const double dist_err = std::sqrt(2.0 * 2.0 * inner_tol / mu_w);
  return {rep.x, dist_err};
}

Vector prox_black_box(const std::function<double(const Vector&)>& phi, const Vector& x_hat,
                      double ell, double tol, double half_width) {
  const int d = static_cast<int>(x_hat.size());
  auto objective = [&](const Vector& w) { return phi(w) + ell * (w - x_hat).squaredNorm(); };
  if (d == 1) {
    auto f1 = [&](double t) { return objective(Vector::Constant(1, t)); };
    // Coarse scan guards against the weakly-convex objective's flat spots.
    const double lo = x_hat[0] - half_width, hi = x_hat[0] + half_width;
    double best_t = x_hat[0];
    double best_v = f1(best_t);
    for (int i = 0; i <= 4000; ++i) {
      const double t = lo + (hi - lo) * i / 4000.0;
      const double v = f1(t);
      if (v < best_v) {
        best_v = v;
        best_t = t;
      }
    }
    const double step = (hi - lo) / 4000.0;
    // The prox objective is strongly convex, so its (finite-difference)
    // derivative is increasing: bisection localizes the minimizer far below
    // what value comparisons can resolve.
    const double fd_h = 1e-5 * std::max(1.0, std::abs(best_t));
    auto deriv = [&](double t) { return (f1(t + fd_h) - f1(t - fd_h)) / (2.0 * fd_h); };
    double a = best_t - 2.0 * step, b = best_t + 2.0 * step;
    if (deriv(a) > 0.0 || deriv(b) < 0.0) {
      a = best_t - half_width / 100.0;
      b = best_t + half_width / 100.0;
    }
    if (deriv(a) <= 0.0 && deriv(b) >= 0.0) {
      while (b - a > std::max(tol, 1e-13)) {
        const double mid = 0.5 * (a + b);
        if (deriv(mid) >= 0.0) {
          b = mid;
        } else {
          a = mid;
        }
      }
      return Vector::Constant(1, 0.5 * (a + b));
    }
    return Vector::Constant(1, best_t);
  }
  if (d > 4) throw UncertifiableError("moreau_grad_norm: black-box prox only up to dim 4");
  // Grid plus two refinement rounds.
  Vector lo = x_hat.array() - half_width;
  Vector hi = x_hat.array() + half_width;
  Vector best = x_hat;
  double best_v = objective(best);
  for (int round = 0; round < 6; ++round) {
    const int g = 33;
    std::vector<int> idx(d, 0);
    Vector p(d);
    while (true) {
      for (int k = 0; k < d; ++k) p[k] = lo[k] + (hi[k] - lo[k]) * idx[k] / (g - 1);
      const double v = objective(p);
      if (v < best_v) {
        best_v = v;
        best = p;
      }
      int k = 0;
      for (; k < d; ++k) {
        if (++idx[k] < g) break;
        idx[k] = 0;
      }
      if (k == d) break;
    }
    const Vector span = (hi - lo) / (g - 1);
    lo = best - 2.0 * span;
    hi = best + 2.0 * span;
  }
  return best;
}

}  // namespace

Certificate duality_gap(const MinimaxProblem& p, const Vector& x_hat, const Vector& y_hat,
                        double inner_tol) {
  if (!is_finite(x_hat) || !is_finite(y_hat))
    throw std::invalid_argument("duality_gap: non-finite query");
  const InnerOpt upper = inner_max_y(p, x_hat, inner_tol);
  const InnerOpt lower = inner_min_x(p, y_hat, inner_tol);
  Certificate cert;
  cert.kind = Certificate::Kind::DualityGap;
  cert.value = upper.value - lower.value;
  cert.error_bound = upper.error + lower.error;
  cert.inner_tol = inner_tol;
  cert.method = worse(upper.method, lower.method);
  return cert;
}

std::pair<double, double> stationarity_f(const MinimaxProblem& p, const Vector& x_hat,
                                         const Vector& y_hat) {
  const double ell = p.profile.ell;
  const Vector y_plus = p.set_y.project(y_hat + p.grad_y(x_hat, y_hat) / ell);
  const double r_y = ell * (y_plus - y_hat).norm();
  const Vector x_step = p.set_x.project(x_hat - p.grad_x(x_hat, y_plus) / ell);
  const double r_x = ell * (x_step - x_hat).norm();
  if (!std::isfinite(r_x) || !std::isfinite(r_y))
    throw std::invalid_argument("stationarity_f: non-finite residuals");
  return {r_x, r_y};
}

Certificate phi_grad_norm(const MinimaxProblem& p, const Vector& x_hat, double inner_tol) {
  Certificate cert;
  cert.kind = Certificate::Kind::PhiGrad;
  cert.inner_tol = inner_tol;
  std::optional<Vector> y_star;
  if (p.reference && p.reference->y_star_of) {
    y_star = p.reference->y_star_of(x_hat);
    cert.method = Certificate::Method::ClosedForm;
    cert.error_bound = 0.0;
  }
  if (!y_star) {
    if (!(p.profile.mu_y > 0.0))
      throw UncertifiableError("phi_grad_norm: requires mu_y > 0 for a unique argmax");
    ScalarObjective neg;
    neg.grad = [&p, &x_hat](const Vector& y) -> Vector { return -p.grad_y(x_hat, y); };
    neg.ell = p.profile.ell;
    neg.mu = p.profile.mu_y;
    const AgdResult r = agd(neg, p.set_y, p.set_y.feasible_point(), inner_tol);
    if (r.status != Status::Ok) throw UncertifiableError("phi_grad_norm: inner solve failed");
    y_star = r.x;
    cert.method = Certificate::Method::InnerSolver;
    cert.error_bound = p.profile.ell * std::sqrt(2.0 * inner_tol / p.profile.mu_y);
  }
  cert.value = p.grad_x(x_hat, *y_star).norm();
  return cert;
}

Certificate moreau_grad_norm(const MinimaxProblem& p, const Vector& x_hat, double ell,
                             double inner_tol) {
  const auto [prox, dist_err] = minimax_prox(p, x_hat, ell, inner_tol);
  return moreau_from_prox(x_hat, prox, ell, dist_err, inner_tol,
                          Certificate::Method::InnerSolver);
}

Certificate moreau_grad_norm(const std::function<double(const Vector&)>& phi, const Vector& x_hat,
                             double ell, double inner_tol, double half_width) {
  const Vector prox = prox_black_box(phi, x_hat, ell, std::min(inner_tol, 1e-10), half_width);
  return moreau_from_prox(x_hat, prox, ell, inner_tol, inner_tol, Certificate::Method::Grid);
}

NearStationarityWitness near_stationarity_witness(const MinimaxProblem& p, const Vector& x_hat,
                                                  double ell, double inner_tol) {
  const auto [prox, dist_err] = minimax_prox(p, x_hat, ell, inner_tol);
  NearStationarityWitness w;
  w.x_bar = prox;
  w.dist = (x_hat - prox).norm();
  w.moreau = moreau_from_prox(x_hat, prox, ell, dist_err, inner_tol,
                              Certificate::Method::InnerSolver);
  return w;
}

NearStationarityWitness near_stationarity_witness(const std::function<double(const Vector&)>& phi,
                                                  const Vector& x_hat, double ell,
                                                  double inner_tol, double half_width) {
  const Vector prox = prox_black_box(phi, x_hat, ell, std::min(inner_tol, 1e-10), half_width);
  NearStationarityWitness w;
  w.x_bar = prox;
  w.dist = (x_hat - prox).norm();
  w.moreau = moreau_from_prox(x_hat, prox, ell, inner_tol, inner_tol,
                              Certificate::Method::Grid);
  return w;
}

GridSaddle brute_force_saddle(const MinimaxProblem& p, int grid_per_dim, double whole_space_box) {
  if (p.dim_x() + p.dim_y() > 4)
    throw UncertifiableError("brute_force_saddle: total dimension must be <= 4");
  if (grid_per_dim < 1) throw std::invalid_argument("brute_force_saddle: grid_per_dim >= 1");
  const Vector around_x =
      p.reference && p.reference->x_star ? *p.reference->x_star : p.set_x.feasible_point();
  const Vector around_y =
      p.reference && p.reference->y_star ? *p.reference->y_star : p.set_y.feasible_point();

  GridSaddle out;
  double best_outer = std::numeric_limits<double>::infinity();
  for_each_grid_point(p.set_x, grid_per_dim, whole_space_box, around_x, [&](const Vector& x) {
    double best_inner = -std::numeric_limits<double>::infinity();
    Vector best_y;
    for_each_grid_point(p.set_y, grid_per_dim, whole_space_box, around_y, [&](const Vector& y) {
      const double v = p.value(x, y);
      if (v > best_inner) {
        best_inner = v;
        best_y = y;
      }
    });
    if (best_inner < best_outer) {
      best_outer = best_inner;
      out.x = x;
      out.y = best_y;
    }
  });
  out.value = best_outer;
  const double hx = grid_spacing(p.set_x, grid_per_dim, whole_space_box, around_x);
  const double hy = grid_spacing(p.set_y, grid_per_dim, whole_space_box, around_y);
  out.error_bound = grid_per_dim == 1 ? std::numeric_limits<double>::infinity()
                                      : p.profile.ell * (hx + hy);
  return out;
}

}  // namespace minimax
