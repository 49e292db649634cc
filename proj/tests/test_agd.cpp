// Copyright 2026 Minimax Solvers Contributors
// Licensed under the Apache License, Version 2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "minimax/agd.hpp"

using namespace minimax;

namespace {

Vector vec1(double v) { return Vector::Constant(1, v); }

// Diagonal quadratic 0.5 x'Dx - b'x with counting.
struct Quadratic {
  Vector diag;
  Vector b;
  long long grads = 0;

  ScalarObjective objective(double mu_override = 0.0) {
    ScalarObjective obj;
    obj.value = [this](const Vector& x) {
      return 0.5 * x.dot(diag.cwiseProduct(x)) - b.dot(x);
    };
    obj.grad = [this](const Vector& x) -> Vector {
      ++grads;
      return diag.cwiseProduct(x) - b;
    };
    obj.ell = diag.maxCoeff();
    obj.mu = mu_override > 0.0 ? mu_override : diag.minCoeff();
    return obj;
  }

  Vector minimizer() const { return b.cwiseQuotient(diag); }
  double min_value() const { return -0.5 * b.cwiseQuotient(diag).dot(b); }
};

}  // namespace

TEST_CASE("suggested bound anchors") {
  CHECK(agd_suggested_bound(1.0, 1.0, 1.0, 1.0) == 20);
  // 10 * 10 * ln(1e12) + 10 = 2773.1 -> 2774
  CHECK(agd_suggested_bound(100.0, 1.0, 1.0, 1e-6) == 2774);
  CHECK(agd_suggested_bound(4.0, 1.0, 1.0, 1.0) >= agd_suggested_bound(1.0, 1.0, 1.0, 1.0));
  CHECK(agd_suggested_bound(9.0, 2.0, 3.0, 1e-3) >= agd_suggested_bound(9.0, 2.0, 3.0, 1e-2));
}

TEST_CASE("kappa = 1 solves in one projected gradient step") {
  Quadratic q{vec1(1.0), vec1(3.0)};  // g(x) = (x-3)^2/2 up to a constant
  const auto res = agd(q.objective(), ConstraintSet::whole_space(1), vec1(0.0), 1e-6);
  CHECK(res.status == Status::Ok);
  CHECK(res.iters == 1);
  CHECK(std::abs(res.x[0] - 3.0) <= 1e-12);
  const auto obj = q.objective();
  CHECK(obj.value(res.x) - q.min_value() <= 1e-12);
  CHECK(res.grad_calls == 2);
}

TEST_CASE("boundary optimum on a box") {
  Quadratic q{vec1(1.0), vec1(2.0)};  // g(x) = (x-2)^2/2 up to a constant
  const auto res =
      agd(q.objective(), ConstraintSet::box(vec1(0.0), vec1(1.0)), vec1(0.0), 1e-8);
  CHECK(res.status == Status::Ok);
  CHECK(std::abs(res.x[0] - 1.0) <= 1e-12);
}

TEST_CASE("ill-conditioned quadratic meets the theorem bound") {
  Quadratic q{Vector(2), Vector(2)};
  q.diag << 1.0, 100.0;
  q.b << 1.0, 100.0;
  const double eps = 1e-6;
  const Vector x0 = Vector::Zero(2);
  const auto res = agd(q.objective(), ConstraintSet::whole_space(2), x0, eps);
  CHECK(res.status == Status::Ok);
  const Vector x_star = q.minimizer();
  CHECK((res.x - x_star).norm() <= std::sqrt(2.0 * eps));
  const double kappa = 100.0;
  const double bound =
      10.0 * std::sqrt(kappa) *
          std::log(kappa * kappa * kappa * 100.0 * (x0 - x_star).squaredNorm() / eps) +
      10.0;
  CHECK(static_cast<double>(res.iters) <= bound);
  // Termination certificate holds exactly as tested.
  CHECK(res.residual_sq <= eps / (2.0 * kappa * kappa * (100.0 - 1.0)));
  // Two gradient calls per iteration: one for the step, one for the check.
  CHECK(res.grad_calls == 2 * res.iters);
}

TEST_CASE("optimality across random quadratics") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 25; ++trial) {
    const int dim = 1 + static_cast<int>(u(rng) * 6);
    Quadratic q{Vector(dim), Vector(dim)};
    const double kappa = std::pow(10.0, 4.0 * u(rng));
    for (int i = 0; i < dim; ++i) {
      q.diag[i] = 1.0 + (kappa - 1.0) * u(rng);
      q.b[i] = 2.0 * u(rng) - 1.0;
    }
    q.diag[0] = 1.0;
    if (dim > 1) q.diag[dim - 1] = kappa;
    const double eps = 1e-7;
    const auto res = agd(q.objective(), ConstraintSet::whole_space(dim), Vector::Zero(dim), eps);
    REQUIRE(res.status == Status::Ok);
    const auto obj = q.objective();
    CHECK(obj.value(res.x) - q.min_value() <= eps);
  }
}

TEST_CASE("budget exhaustion returns the best iterate") {
  Quadratic q{Vector(2), Vector(2)};
  q.diag << 1.0, 1000.0;
  q.b << 1.0, 1.0;
  const auto res = agd(q.objective(), ConstraintSet::whole_space(2), Vector::Zero(2), 1e-12,
                       /*max_iter_cap=*/3);
  CHECK(res.status == Status::BudgetExhausted);
  CHECK(res.iters == 3);
  CHECK(is_finite(res.x));
}

TEST_CASE("non-finite gradients abort") {
  ScalarObjective obj;
  obj.grad = [](const Vector& x) -> Vector {
    return Vector::Constant(x.size(), std::numeric_limits<double>::quiet_NaN());
  };
  obj.ell = 2.0;
  obj.mu = 1.0;
  const auto res = agd(obj, ConstraintSet::whole_space(1), vec1(0.0), 1e-6);
  CHECK(res.status == Status::NumericalFailure);
}

TEST_CASE("input validation") {
  Quadratic q{vec1(1.0), vec1(0.0)};
  CHECK_THROWS_AS(agd(q.objective(), ConstraintSet::whole_space(1), vec1(0.0), 0.0),
                  std::invalid_argument);
  ScalarObjective bad;
  bad.grad = [](const Vector& x) -> Vector { return x; };
  bad.ell = 1.0;
  bad.mu = 2.0;
  CHECK_THROWS_AS(agd(bad, ConstraintSet::whole_space(1), vec1(0.0), 1e-3),
                  std::invalid_argument);
}
