// Copyright 2026 Minimax Solvers Contributors
// Licensed under the Apache License, Version 2.0
#include "bench/verify.hpp"

#include <cmath>
#include <functional>
#include <random>

#include "minimax/drivers.hpp"
#include "minimax/metrics.hpp"
#include "minimax/problems.hpp"

namespace minimax::bench {

namespace {

struct Reporter {
  std::ostream& out;
  bool all_ok = true;

  void check(const std::string& property, bool ok) {
    out << (ok ? "PASS " : "FAIL ") << property << "\n";
    all_ok = all_ok && ok;
  }
};

Vector random_vector(std::mt19937_64& rng, int dim, double scale) {
  std::uniform_real_distribution<double> u(-scale, scale);
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v[i] = u(rng);
  return v;
}

void suite_projections(Reporter& rep) {
  std::mt19937_64 rng(101);
  std::vector<ConstraintSet> sets = {
      ConstraintSet::whole_space(4),
      ConstraintSet::box(Vector::Constant(4, -1.0), Vector::Constant(4, 2.0)),
      ConstraintSet::ball(Vector::Zero(4), 1.5),
      ConstraintSet::simplex(4),
  };
  bool nonexpansive = true, optimal = true, simplex_ok = true, idempotent = true;
  for (const auto& set : sets) {
    for (int i = 0; i < 1000; ++i) {
      const Vector a = random_vector(rng, 4, 5.0), b = random_vector(rng, 4, 5.0);
      nonexpansive =
          nonexpansive && (set.project(a) - set.project(b)).norm() <= (a - b).norm() + 1e-12;
    }
    for (int i = 0; i < 10; ++i) {
      const Vector p = random_vector(rng, 4, 5.0);
      const Vector proj = set.project(p);
      idempotent = idempotent && (set.project(proj) - proj).norm() <= 1e-12;
      for (int j = 0; j < 100; ++j) {
        const Vector q = set.project(random_vector(rng, 4, 5.0));
        optimal = optimal && (p - proj).norm() <= (p - q).norm() + 1e-10;
      }
    }
  }
  const auto simplex = ConstraintSet::simplex(6);
  for (int i = 0; i < 300; ++i) {
    const Vector out = simplex.project(random_vector(rng, 6, 8.0));
    simplex_ok = simplex_ok && std::abs(out.sum() - 1.0) <= 1e-12 && out.minCoeff() >= 0.0;
  }
  rep.check("projection.nonexpansive", nonexpansive);
  rep.check("projection.optimality", optimal);
  rep.check("projection.simplex_probability_vector", simplex_ok);
  rep.check("projection.idempotent", idempotent);
}

void suite_contraction(Reporter& rep) {
  std::mt19937_64 rng(202);
  std::vector<MinimaxProblem> problems;
  for (int k = 0; k < 10; ++k) {
    ProblemSpec spec;
    spec.family = k % 3 == 2 ? Family::NcScSin : Family::QuadraticScsc;
    spec.dim_x = 2 + k % 2;
    spec.dim_y = 2 + k % 2;
    spec.mu_x = 0.3;
    spec.mu_y = 0.4;
    spec.seed = 300 + k;
    problems.push_back(make(spec));
  }
  bool contraction = true;
  for (const auto& p : problems) {
    const double ell = p.profile.ell;
    const int m = p.dim_x(), n = p.dim_y();
    for (int i = 0; i < 100; ++i) {
      const Vector x_bar = random_vector(rng, m, 2.0);
      const Vector a = random_vector(rng, m, 2.0), b = random_vector(rng, m, 2.0);
      const Vector z = random_vector(rng, n, 2.0);
      const Vector ta = p.set_x.project(x_bar - p.grad_x(a, z) / (2.0 * ell));
      const Vector tb = p.set_x.project(x_bar - p.grad_x(b, z) / (2.0 * ell));
      contraction = contraction && (ta - tb).norm() <= 0.5 * (a - b).norm() + 1e-12;
    }
  }
  rep.check("giter.T_z_half_contraction", contraction);

  // Fixed point equals the proximal argmin on a 1-D quadratic.
  ProblemSpec spec;
  spec.family = Family::QuadraticScsc;
  spec.P = (Eigen::MatrixXd(1, 1) << 2.0).finished();
  spec.A = (Eigen::MatrixXd(1, 1) << 1.0).finished();
  spec.Q = (Eigen::MatrixXd(1, 1) << 2.0).finished();
  spec.b = (Vector(1) << 1.0).finished();
  spec.c = (Vector(1) << -1.0).finished();
  const auto p = make(spec);
  const double ell = p.profile.ell;
  const double x_bar = 0.4, z = -0.3;
  Vector x = Vector::Zero(1);
  for (int k = 0; k < 200; ++k)
    x = p.set_x.project(Vector::Constant(1, x_bar) - p.grad_x(x, Vector::Constant(1, z)) / (2.0 * ell));
  // argmin_x x^2 + xz + x + ell (x - x_bar)^2 : (2 + 2 ell) x = 2 ell x_bar - z - 1.
  const double closed = (2.0 * ell * x_bar - z - 1.0) / (2.0 + 2.0 * ell);
  rep.check("giter.fixed_point_matches_prox_argmin", std::abs(x[0] - closed) <= 1e-10);
}

void suite_lemma_lipschitz(Reporter& rep) {
  ProblemSpec spec;
  spec.family = Family::QuadraticScsc;
  spec.dim_x = 3;
  spec.dim_y = 3;
  spec.mu_x = 0.4;
  spec.mu_y = 0.25;
  spec.seed = 404;
  const auto p = make(spec);
  const double kx = p.profile.kappa_x(), ky = p.profile.kappa_y(), ell = p.profile.ell;
  std::mt19937_64 rng(55);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  bool y_lip = true, x_lip = true, phi_smooth = true, psi_smooth = true, fd_match = true;
  int used = 0;
  for (int i = 0; i < 200; ++i) {
    Vector a = *p.reference->x_star, b = *p.reference->x_star;
    Vector ca = *p.reference->y_star, cb = *p.reference->y_star;
    for (int k = 0; k < 3; ++k) {
      a[k] += u(rng);
      b[k] += u(rng);
      ca[k] += u(rng);
      cb[k] += u(rng);
    }
    const auto ya = p.reference->y_star_of(a), yb = p.reference->y_star_of(b);
    const auto xa = p.reference->x_star_of(ca), xb = p.reference->x_star_of(cb);
    if (!ya || !yb || !xa || !xb) continue;
    ++used;
    y_lip = y_lip && (*ya - *yb).norm() <= ky * (a - b).norm() + 1e-10;
    x_lip = x_lip && (*xa - *xb).norm() <= kx * (ca - cb).norm() + 1e-10;
    phi_smooth = phi_smooth &&
                 (p.grad_x(a, *ya) - p.grad_x(b, *yb)).norm() <= 2.0 * ky * ell * (a - b).norm() + 1e-10;
    psi_smooth = psi_smooth &&
                 (p.grad_y(*xa, ca) - p.grad_y(*xb, cb)).norm() <= 2.0 * kx * ell * (ca - cb).norm() + 1e-10;
  }
  const double h = 1e-5;
  for (int i = 0; i < 20; ++i) {
    Vector x = *p.reference->x_star;
    for (int k = 0; k < 3; ++k) x[k] += u(rng);
    const auto ys = p.reference->y_star_of(x);
    if (!ys) continue;
    const Vector g = p.grad_x(x, *ys);
    for (int k = 0; k < 3; ++k) {
      Vector xp = x, xm = x;
      xp[k] += h;
      xm[k] -= h;
      const auto fp = p.reference->phi(xp), fm = p.reference->phi(xm);
      if (!fp || !fm) continue;
      fd_match = fd_match && std::abs(g[k] - (*fp - *fm) / (2.0 * h)) <=
                                 1e-5 * std::max(1.0, std::abs(g[k]));
    }
  }
  rep.check("lemma.y_star_kappa_lipschitz", y_lip && used >= 150);
  rep.check("lemma.x_star_kappa_lipschitz", x_lip);
  rep.check("lemma.phi_2kyell_smooth", phi_smooth);
  rep.check("lemma.psi_2kxell_smooth", psi_smooth);
  rep.check("lemma.grad_phi_finite_difference", fd_match);
}

void suite_moreau(Reporter& rep) {
  auto abs_phi = [](const Vector& x) { return std::abs(x[0]); };
  const double ell = 0.5;
  const auto anchor = moreau_grad_norm(abs_phi, Vector::Constant(1, 2.0), ell, 1e-12);
  rep.check("moreau.abs_anchor_prox_and_gradient", std::abs(anchor.value - 1.0) <= 1e-10);
  const auto at_zero = moreau_grad_norm(abs_phi, Vector::Constant(1, 0.0), ell, 1e-12);
  rep.check("moreau.abs_anchor_origin", std::abs(at_zero.value) <= 1e-10);

  auto grad_env = [&](double t) {
    const auto w = near_stationarity_witness(abs_phi, Vector::Constant(1, t), ell, 1e-12);
    return 2.0 * ell * (t - w.x_bar[0]);
  };
  bool identity = true;
  for (double t : {-2.0, -0.6, 0.4, 3.0}) {
    const double huber_grad = std::abs(t) <= 1.0 ? t : (t > 0 ? 1.0 : -1.0);
    identity = identity && std::abs(std::abs(grad_env(t)) - std::abs(huber_grad)) <= 1e-4;
  }
  rep.check("moreau.envelope_gradient_identity", identity);

  std::mt19937_64 rng(66);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  bool smooth = true, descent = true;
  for (int i = 0; i < 200; ++i) {
    const double a = u(rng), b = u(rng);
    smooth = smooth && std::abs(grad_env(a) - grad_env(b)) <= 4.0 * ell * std::abs(a - b) + 1e-8;
    const auto w = near_stationarity_witness(abs_phi, Vector::Constant(1, a), ell, 1e-12);
    descent = descent && abs_phi(w.x_bar) <= std::abs(a) + 1e-12;
  }
  rep.check("moreau.envelope_4ell_smooth", smooth);
  rep.check("moreau.prox_descent", descent);
}

void suite_reductions(Reporter& rep) {
  ProblemSpec qspec;
  qspec.family = Family::QuadraticScsc;
  qspec.dim_x = 2;
  qspec.dim_y = 2;
  qspec.mu_x = 0.5;
  qspec.mu_y = 0.5;
  qspec.seed = 777;
  const auto base = make(qspec);
  const double dy = *base.set_y.diameter();
  const double eps = 0.3;
  std::mt19937_64 rng(88);
  std::uniform_real_distribution<double> u(-1.0, 1.0);

  ReductionSpec scc;
  scc.kind = ReductionSpec::Kind::Scc;
  scc.eps = eps;
  scc.y0 = base.set_y.feasible_point();
  const auto reduced = reduce(base, scc);
  bool value_bound = true;
  for (int i = 0; i < 500; ++i) {
    const Vector x = random_vector(rng, 2, 2.0);
    const Vector y = base.set_y.project(scc.y0 + random_vector(rng, 2, dy / 2.0));
    value_bound =
        value_bound && std::abs(base.value(x, y) - reduced.value(x, y)) <= eps / 4.0 + 1e-12;
  }
  rep.check("reduction.scc_value_within_eps_over_4", value_bound);
  rep.check("reduction.scc_modulus",
            std::abs(reduced.profile.mu_y - (base.profile.mu_y + eps / (2.0 * dy * dy))) <= 1e-15);

  ProblemSpec nspec;
  nspec.family = Family::NcCToy;
  nspec.dim_x = 2;
  nspec.dim_y = 2;
  nspec.box_radius = 0.5;
  const auto nc_base = make(nspec);
  const double ncdy = *nc_base.set_y.diameter();
  ReductionSpec nc;
  nc.kind = ReductionSpec::Kind::Nc;
  nc.eps = eps;
  nc.y0 = nc_base.set_y.feasible_point();
  const auto nc_reduced = reduce(nc_base, nc);
  bool grad_bound = true;
  for (int i = 0; i < 500; ++i) {
    const Vector x = random_vector(rng, 2, 3.0);
    const Vector y = nc_base.set_y.project(nc.y0 + random_vector(rng, 2, ncdy));
    grad_bound = grad_bound &&
                 (nc_base.grad_y(x, y) - nc_reduced.grad_y(x, y)).norm() <= eps / 2.0 + 1e-12;
  }
  rep.check("reduction.nc_gradient_within_eps_over_2", grad_bound);
  rep.check("reduction.nc_modulus",
            std::abs(nc_reduced.profile.mu_y - eps / (2.0 * ncdy)) <= 1e-15);

  ReductionSpec zero;
  zero.kind = ReductionSpec::Kind::Scc;
  zero.eps = 0.0;
  zero.y0 = scc.y0;
  const auto same = reduce(base, zero);
  const Vector x = random_vector(rng, 2, 1.0), y = random_vector(rng, 2, 1.0);
  rep.check("reduction.zero_eps_identity", same.value(x, y) == base.value(x, y) &&
                                               (same.grad_y(x, y) - base.grad_y(x, y)).norm() == 0.0);
}

}  // namespace

std::vector<std::string> verify_suite_names() {
  return {"contraction", "lemma-lipschitz", "moreau", "reductions", "projections"};
}

int run_verify_suite(const std::string& name, std::ostream& out) {
  Reporter rep{out};
  if (name == "projections") {
    suite_projections(rep);
  } else if (name == "contraction") {
    suite_contraction(rep);
  } else if (name == "lemma-lipschitz") {
    suite_lemma_lipschitz(rep);
  } else if (name == "moreau") {
    suite_moreau(rep);
  } else if (name == "reductions") {
    suite_reductions(rep);
  } else if (name == "all") {
    bool ok = true;
    for (const auto& suite : verify_suite_names()) ok = run_verify_suite(suite, out) == 0 && ok;
    return ok ? 0 : 1;
  } else {
    out << "unknown suite: " << name << "\n";
    return 2;
  }
  return rep.all_ok ? 0 : 1;
}

}  // namespace minimax::bench
