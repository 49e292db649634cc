// Copyright 2026 Minimax Solvers Contributors
// Licensed under the Apache License, Version 2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "minimax/metrics.hpp"
#include "minimax/problems.hpp"

using namespace minimax;

namespace {

Vector vec(std::initializer_list<double> xs) {
  Vector v(static_cast<int>(xs.size()));
  int i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

Vector random_vector(std::mt19937_64& rng, int dim, double scale) {
  std::uniform_real_distribution<double> u(-scale, scale);
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v[i] = u(rng);
  return v;
}

std::vector<ProblemSpec> suite_specs() {
  std::vector<ProblemSpec> specs;
  {
    ProblemSpec s;
    s.family = Family::QuadraticScsc;
    s.P = (Eigen::MatrixXd(1, 1) << 2.0).finished();
    s.A = (Eigen::MatrixXd(1, 1) << 1.0).finished();
    s.Q = (Eigen::MatrixXd(1, 1) << 2.0).finished();
    s.b = vec({1.0});
    s.c = vec({-1.0});
    specs.push_back(s);
  }
  {
    ProblemSpec s;
    s.family = Family::QuadraticScsc;
    s.dim_x = 4;
    s.dim_y = 3;
    s.mu_x = 0.2;
    s.mu_y = 0.1;
    s.seed = 42;
    specs.push_back(s);
  }
  {
    ProblemSpec s;
    s.family = Family::BilinearSimplex;
    s.A = (Eigen::MatrixXd(2, 2) << 1.0, -1.0, -1.0, 1.0).finished();
    specs.push_back(s);
  }
  {
    ProblemSpec s;
    s.family = Family::SccBilinear;
    s.dim_x = 3;
    s.dim_y = 2;
    s.mu_x = 1.0;
    s.scc_diameter = 2.0;
    s.seed = 5;
    specs.push_back(s);
  }
  {
    ProblemSpec s;
    s.family = Family::NcScSin;
    s.dim_x = 2;
    s.dim_y = 2;
    s.mu_y = 2.0;
    s.box_radius = 1.0;
    specs.push_back(s);
  }
  {
    ProblemSpec s;
    s.family = Family::NcCToy;
    s.dim_x = 2;
    s.dim_y = 2;
    s.box_radius = 0.5;
    specs.push_back(s);
  }
  return specs;
}

}  // namespace

TEST_CASE("quadratic 1x1 anchor has saddle (-1/5, -3/5)") {
  ProblemSpec s;
  s.family = Family::QuadraticScsc;
  s.P = (Eigen::MatrixXd(1, 1) << 2.0).finished();
  s.A = (Eigen::MatrixXd(1, 1) << 1.0).finished();
  s.Q = (Eigen::MatrixXd(1, 1) << 2.0).finished();
  s.b = vec({1.0});
  s.c = vec({-1.0});
  const auto p = make(s);
  REQUIRE(p.reference);
  REQUIRE(p.reference->x_star);
  CHECK(std::abs((*p.reference->x_star)[0] - (-0.2)) <= 1e-12);
  CHECK(std::abs((*p.reference->y_star)[0] - (-0.6)) <= 1e-12);
}

TEST_CASE("matching pennies value is zero at uniform strategies") {
  ProblemSpec s;
  s.family = Family::BilinearSimplex;
  s.A = (Eigen::MatrixXd(2, 2) << 1.0, -1.0, -1.0, 1.0).finished();
  const auto p = make(s);
  const Vector uniform = vec({0.5, 0.5});
  CHECK(std::abs(p.value(uniform, uniform)) <= 1e-15);
  CHECK(std::abs(*p.reference->phi(uniform)) <= 1e-15);
  CHECK(std::abs(*p.reference->psi(uniform)) <= 1e-15);
  CHECK(p.profile.ell == doctest::Approx(2.0));
}

TEST_CASE("nc_sc_sin anchors at the origin") {
  ProblemSpec s;
  s.family = Family::NcScSin;
  s.dim_x = 1;
  s.dim_y = 1;
  s.mu_y = 2.0;
  s.box_radius = 1.0;
  const auto p = make(s);
  CHECK(std::abs(*p.reference->phi(vec({0.0}))) <= 1e-15);
  CHECK((*p.reference->y_star_of(vec({0.0})))[0] == 0.0);
  // Phi(x) = sin x + x^2/4 inside the clip region.
  CHECK(*p.reference->phi(vec({1.0})) == doctest::Approx(std::sin(1.0) + 0.25));
}

TEST_CASE("analytic gradients match central finite differences") {
  std::mt19937_64 rng(17);
  const double h = 1e-5;
  for (const auto& spec : suite_specs()) {
    const auto p = make(spec);
    const int m = p.dim_x(), n = p.dim_y();
    for (int trial = 0; trial < 100; ++trial) {
      const Vector x = p.set_x.project(random_vector(rng, m, 2.0));
      const Vector y = p.set_y.project(random_vector(rng, n, 2.0));
      const Vector gx = p.grad_x(x, y);
      const Vector gy = p.grad_y(x, y);
      for (int i = 0; i < m; ++i) {
        Vector xp = x, xm = x;
        xp[i] += h;
        xm[i] -= h;
        const double fd = (p.value(xp, y) - p.value(xm, y)) / (2.0 * h);
        CHECK(std::abs(gx[i] - fd) <= 1e-6 * std::max(1.0, std::abs(fd)));
      }
      for (int j = 0; j < n; ++j) {
        Vector yp = y, ym = y;
        yp[j] += h;
        ym[j] -= h;
        const double fd = (p.value(x, yp) - p.value(x, ym)) / (2.0 * h);
        CHECK(std::abs(gy[j] - fd) <= 1e-6 * std::max(1.0, std::abs(fd)));
      }
    }
  }
}

TEST_CASE("profile ell is a valid Lipschitz bound for the full gradient") {
  std::mt19937_64 rng(23);
  for (const auto& spec : suite_specs()) {
    const auto p = make(spec);
    const int m = p.dim_x(), n = p.dim_y();
    for (int trial = 0; trial < 500; ++trial) {
      const Vector x1 = random_vector(rng, m, 3.0), x2 = random_vector(rng, m, 3.0);
      const Vector y1 = random_vector(rng, n, 3.0), y2 = random_vector(rng, n, 3.0);
      Vector d1(m + n), d2(m + n);
      d1 << p.grad_x(x1, y1), p.grad_y(x1, y1);
      d2 << p.grad_x(x2, y2), p.grad_y(x2, y2);
      Vector dz(m + n);
      dz << x1 - x2, y1 - y2;
      CHECK((d1 - d2).norm() <= p.profile.ell * dz.norm() + 1e-9);
    }
  }
}

TEST_CASE("reference saddles are stationary") {
  for (const auto& spec : suite_specs()) {
    const auto p = make(spec);
    if (!p.reference || !p.reference->x_star || !p.reference->y_star) continue;
    const auto [r_x, r_y] = stationarity_f(p, *p.reference->x_star, *p.reference->y_star);
    CHECK(r_x <= 1e-8);
    CHECK(r_y <= 1e-8);
  }
}

TEST_CASE("condition sweep hits requested kappas exactly") {
  SweepFixed fixed;
  fixed.kappa_x = 10.0;
  fixed.dim = 4;
  fixed.seed = 3;
  const auto specs = condition_sweep(Family::QuadraticScsc, {10.0, 100.0}, fixed);
  REQUIRE(specs.size() == 2);
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const auto p = make(specs[i]);
    const double want_ky = i == 0 ? 10.0 : 100.0;
    CHECK(std::abs(p.profile.kappa_x() - 10.0) <= 1e-10 * 10.0);
    CHECK(std::abs(p.profile.kappa_y() - want_ky) <= 1e-10 * want_ky);

    // Power iteration on the [[P, A], [A', Q]] block cross-checks ell = 1.
    std::mt19937_64 rng(99);
    const int m = p.dim_x(), n = p.dim_y();
    Vector v = random_vector(rng, m + n, 1.0).normalized();
    const Vector zero_x = Vector::Zero(m), zero_y = Vector::Zero(n);
    const Vector gx0 = p.grad_x(zero_x, zero_y);
    const Vector gy0 = p.grad_y(zero_x, zero_y);
    double lambda = 0.0;
    for (int it = 0; it < 3000; ++it) {
      // Applies [[P, A], [A', Q]] via gradient differences; grad_y has -Q so
      // the y block is negated and the c offset removed.
      const Vector hx = p.grad_x(v.head(m), v.tail(n)) - gx0;
      const Vector hy = (p.grad_y(v.head(m), v.tail(n)) - gy0) -
                        2.0 * (p.grad_y(zero_x, v.tail(n)) - gy0);
      Vector w(m + n);
      w << hx, hy;
      lambda = v.dot(w);
      const double norm = w.norm();
      if (norm == 0.0) break;
      v = w / norm;
    }
    CHECK(std::abs(std::abs(lambda) - 1.0) <= 1e-9);
  }
  CHECK(condition_sweep(Family::QuadraticScsc, {}, fixed).empty());
}

TEST_CASE("invalid moduli are rejected") {
  ProblemSpec s;
  s.family = Family::QuadraticScsc;
  s.P = (Eigen::MatrixXd(1, 1) << -1.0).finished();  // not PSD
  s.A = (Eigen::MatrixXd(1, 1) << 0.0).finished();
  s.Q = (Eigen::MatrixXd(1, 1) << 1.0).finished();
  s.b = vec({0.0});
  s.c = vec({0.0});
  CHECK_THROWS_AS(make(s), std::invalid_argument);

  ProblemSpec bad_sin;
  bad_sin.family = Family::NcScSin;
  bad_sin.mu_y = 0.0;
  CHECK_THROWS_AS(make(bad_sin), std::invalid_argument);
}
