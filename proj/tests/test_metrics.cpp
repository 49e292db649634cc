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

// f(x, y) = x^2 + xy - y^2 on R x R with the tight smoothness bound sqrt(5).
MinimaxProblem plain_quadratic() {
  return MinimaxProblem{
      [](const Vector& x, const Vector& y) { return x[0] * x[0] + x[0] * y[0] - y[0] * y[0]; },
      [](const Vector& x, const Vector& y) -> Vector { return vec({2.0 * x[0] + y[0]}); },
      [](const Vector& x, const Vector& y) -> Vector { return vec({x[0] - 2.0 * y[0]}); },
      ConstraintSet::whole_space(1),
      ConstraintSet::whole_space(1),
      SmoothnessProfile{std::sqrt(5.0), 2.0, 2.0, std::nullopt, std::nullopt},
      nullptr};
}

MinimaxProblem matching_pennies() {
  ProblemSpec s;
  s.family = Family::BilinearSimplex;
  s.A = (Eigen::MatrixXd(2, 2) << 1.0, -1.0, -1.0, 1.0).finished();
  return make(s);
}

double abs_phi(const Vector& x) { return std::abs(x[0]); }

}  // namespace

TEST_CASE("stationarity residuals: hand-checked arithmetic anchor") {
  const auto p = plain_quadratic();
  // Exact saddle.
  const auto [rx0, ry0] = stationarity_f(p, vec({0.0}), vec({0.0}));
  CHECK(rx0 == 0.0);
  CHECK(ry0 == 0.0);
  // At (1, 0): y+ = 1/sqrt(5), r_y = 1, r_x = 2 + 1/sqrt(5).
  const auto [rx, ry] = stationarity_f(p, vec({1.0}), vec({0.0}));
  const double s = 1.0 / std::sqrt(5.0);
  CHECK(ry == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rx == doctest::Approx(2.0 + s).epsilon(1e-12));
  // Unconstrained X: r_x equals the raw partial-gradient norm at (x, y+).
  CHECK(rx == doctest::Approx(p.grad_x(vec({1.0}), vec({s})).norm()).epsilon(1e-12));
}

TEST_CASE("duality gap anchors on matching pennies") {
  const auto p = matching_pennies();
  const auto vertex = duality_gap(p, vec({1.0, 0.0}), vec({1.0, 0.0}), 1e-9);
  CHECK(vertex.value == doctest::Approx(2.0));
  CHECK(vertex.method == Certificate::Method::ClosedForm);
  const auto center = duality_gap(p, vec({0.5, 0.5}), vec({0.5, 0.5}), 1e-9);
  CHECK(std::abs(center.value) <= 1e-12);
}

TEST_CASE("duality gap via inner solves stays within 2 inner_tol at a saddle") {
  ProblemSpec s;
  s.family = Family::QuadraticScsc;
  s.dim_x = 3;
  s.dim_y = 2;
  s.mu_x = 0.5;
  s.mu_y = 0.25;
  s.seed = 8;
  auto p = make(s);
  const Vector xs = *p.reference->x_star;
  const Vector ys = *p.reference->y_star;
  const auto closed = duality_gap(p, xs, ys, 1e-7);
  CHECK(closed.method == Certificate::Method::ClosedForm);
  CHECK(std::abs(closed.value) <= 1e-10);

  p.reference = nullptr;  // force the AGD path
  const double tol = 1e-7;
  const auto solved = duality_gap(p, xs, ys, tol);
  CHECK(solved.method == Certificate::Method::InnerSolver);
  CHECK(solved.error_bound <= 2.0 * tol);
  CHECK(solved.value >= -2.0 * tol);
  CHECK(solved.value <= 2.0 * tol);
}

TEST_CASE("gap is nonnegative up to certificate error across random points") {
  std::mt19937_64 rng(44);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const auto p = matching_pennies();
  for (int i = 0; i < 50; ++i) {
    const Vector x = p.set_x.project(vec({u(rng), u(rng)}));
    const Vector y = p.set_y.project(vec({u(rng), u(rng)}));
    const auto cert = duality_gap(p, x, y, 1e-9);
    CHECK(cert.value >= -2.0 * cert.inner_tol);
  }
}

TEST_CASE("phi_grad_norm anchors") {
  {
    ProblemSpec s;
    s.family = Family::NcScSin;
    s.dim_x = 1;
    s.dim_y = 1;
    s.mu_y = 2.0;
    s.box_radius = 1.0;
    const auto p = make(s);
    const auto cert = phi_grad_norm(p, vec({0.0}), 1e-10);
    CHECK(cert.value == doctest::Approx(1.0));  // |cos 0| with y*(0) = 0
    CHECK(cert.method == Certificate::Method::ClosedForm);
  }
  {
    ProblemSpec s;
    s.family = Family::QuadraticScsc;
    s.dim_x = 2;
    s.dim_y = 2;
    s.mu_x = 0.5;
    s.mu_y = 0.5;
    s.seed = 14;
    auto p = make(s);
    const auto at_saddle = phi_grad_norm(p, *p.reference->x_star, 1e-9);
    CHECK(at_saddle.value <= 1e-9);

    // Inner-solver path at the saddle: value below the reported error bound.
    const Vector xs = *p.reference->x_star;
    p.reference = nullptr;
    const double tol = 1e-9;
    const auto solved = phi_grad_norm(p, xs, tol);
    CHECK(solved.method == Certificate::Method::InnerSolver);
    CHECK(solved.error_bound ==
          doctest::Approx(p.profile.ell * std::sqrt(2.0 * tol / p.profile.mu_y)));
    CHECK(solved.value <= solved.error_bound + 1e-12);
  }
}

TEST_CASE("phi_grad_norm matches finite differences of Phi on the quadratic suite") {
  ProblemSpec s;
  s.family = Family::QuadraticScsc;
  s.dim_x = 2;
  s.dim_y = 3;
  s.mu_x = 0.4;
  s.mu_y = 0.3;
  s.seed = 3;
  const auto p = make(s);
  std::mt19937_64 rng(15);
  std::uniform_real_distribution<double> u(-0.4, 0.4);
  const double h = 1e-5;
  for (int trial = 0; trial < 25; ++trial) {
    Vector x = *p.reference->x_star;
    for (int i = 0; i < x.size(); ++i) x[i] += u(rng);
    Vector fd(x.size());
    bool valid = true;
    for (int i = 0; i < x.size(); ++i) {
      Vector xp = x, xm = x;
      xp[i] += h;
      xm[i] -= h;
      const auto fp = p.reference->phi(xp), fm = p.reference->phi(xm);
      if (!fp || !fm) {
        valid = false;
        break;
      }
      fd[i] = (*fp - *fm) / (2.0 * h);
    }
    if (!valid) continue;
    const auto cert = phi_grad_norm(p, x, 1e-12);
    CHECK(std::abs(cert.value - fd.norm()) <= 1e-5 * std::max(1.0, fd.norm()));
  }
}

TEST_CASE("moreau anchors for |x| with ell = 1/2") {
  const double ell = 0.5;
  const auto cert = moreau_grad_norm(abs_phi, vec({2.0}), ell, 1e-12);
  CHECK(std::abs(cert.value - 1.0) <= 1e-10);  // prox(2) = 1, 2*0.5*1
  const auto witness = near_stationarity_witness(abs_phi, vec({2.0}), ell, 1e-12);
  CHECK(std::abs(witness.x_bar[0] - 1.0) <= 1e-10);
  CHECK(std::abs(witness.dist - 1.0) <= 1e-10);
  CHECK(witness.dist * 2.0 * ell == witness.moreau.value);

  const auto at_zero = moreau_grad_norm(abs_phi, vec({0.0}), ell, 1e-12);
  CHECK(std::abs(at_zero.value) <= 1e-10);
  const auto w0 = near_stationarity_witness(abs_phi, vec({0.0}), ell, 1e-12);
  CHECK(std::abs(w0.x_bar[0]) <= 1e-10);
  CHECK(std::abs(w0.dist) <= 1e-10);
}

TEST_CASE("moreau gradient matches finite differences of the envelope") {
  // Smooth convex phi; the envelope is evaluated by inner minimization.
  auto phi = [](const Vector& x) { return std::sqrt(1.0 + x[0] * x[0]); };
  const double ell = 0.5;
  auto envelope = [&](double t) {
    const Vector prox =
        near_stationarity_witness(phi, vec({t}), ell, 1e-12).x_bar;
    return phi(prox) + ell * (prox[0] - t) * (prox[0] - t);
  };
  const double h = 1e-4;
  for (double t : {-1.5, -0.3, 0.8, 2.2}) {
    const double fd = (envelope(t + h) - envelope(t - h)) / (2.0 * h);
    const auto cert = moreau_grad_norm(phi, vec({t}), ell, 1e-12);
    CHECK(std::abs(cert.value - std::abs(fd)) <= 1e-4);
  }
  // Same identity for |x|: the envelope is the Huber function.
  for (double t : {-2.0, -0.6, 0.4, 3.0}) {
    const double huber_grad = std::abs(t) <= 1.0 ? t : (t > 0 ? 1.0 : -1.0);
    const auto cert = moreau_grad_norm(abs_phi, vec({t}), ell, 1e-10);
    CHECK(std::abs(cert.value - std::abs(huber_grad)) <= 1e-4);
  }
}

TEST_CASE("envelope is 4 ell smooth and prox descends, sampled") {
  const double ell = 0.5;
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  auto grad_env = [&](double t) {
    const auto w = near_stationarity_witness(abs_phi, vec({t}), ell, 1e-12);
    return 2.0 * ell * (t - w.x_bar[0]);
  };
  for (int i = 0; i < 200; ++i) {
    const double a = u(rng), b = u(rng);
    CHECK(std::abs(grad_env(a) - grad_env(b)) <= 4.0 * ell * std::abs(a - b) + 1e-8);
    const auto w = near_stationarity_witness(abs_phi, vec({a}), ell, 1e-12);
    CHECK(abs_phi(w.x_bar) <= abs_phi(vec({a})) + 1e-12);
  }
}

TEST_CASE("moreau certificate through the minimax prox subproblem") {
  ProblemSpec s;
  s.family = Family::NcScSin;
  s.dim_x = 1;
  s.dim_y = 1;
  s.mu_y = 2.0;
  s.box_radius = 1.0;
  const auto p = make(s);
  const double ell = p.profile.ell;
  // Phi(x) = sin x + huber(x); compare the SCSC prox solve against the
  // black-box golden-section oracle.
  auto phi = [&](const Vector& x) { return *p.reference->phi(x); };
  for (double t : {-2.0, 0.0, 1.3}) {
    const auto via_minimax = moreau_grad_norm(p, vec({t}), ell, 1e-10);
    const auto via_grid = moreau_grad_norm(phi, vec({t}), ell, 1e-10);
    CHECK(std::abs(via_minimax.value - via_grid.value) <= 1e-5);
  }
}

TEST_CASE("brute-force saddle oracle") {
  const auto pennies = matching_pennies();
  const auto g = brute_force_saddle(pennies, 101);
  CHECK(std::abs(g.value) <= 0.03);

  const auto sep = MinimaxProblem{
      [](const Vector& x, const Vector& y) { return x.squaredNorm() - y.squaredNorm(); },
      [](const Vector& x, const Vector&) -> Vector { return 2.0 * x; },
      [](const Vector&, const Vector& y) -> Vector { return -2.0 * y; },
      ConstraintSet::box(vec({-1.0}), vec({1.0})),
      ConstraintSet::box(vec({-1.0}), vec({1.0})),
      SmoothnessProfile{2.0, 2.0, 2.0, 2.0, 2.0},
      nullptr};
  const auto s = brute_force_saddle(sep, 41);
  CHECK(std::abs(s.x[0]) <= 0.05);
  CHECK(std::abs(s.y[0]) <= 0.05);
  CHECK(std::abs(s.value) <= 0.01);

  const auto single = brute_force_saddle(sep, 1);
  CHECK(single.x[0] == 0.0);
  CHECK(single.y[0] == 0.0);

  ProblemSpec big;
  big.family = Family::QuadraticScsc;
  big.dim_x = 3;
  big.dim_y = 3;
  big.seed = 1;
  big.mu_x = 0.5;
  big.mu_y = 0.5;
  CHECK_THROWS_AS(brute_force_saddle(make(big), 11), UncertifiableError);
}
