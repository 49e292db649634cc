// Copyright 2026 Minimax Solvers Contributors
// Licensed under the Apache License, Version 2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "minimax/constraint_set.hpp"
#include "minimax/problem.hpp"

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

std::vector<ConstraintSet> sample_sets() {
  return {
      ConstraintSet::whole_space(4),
      ConstraintSet::box(vec({-1.0, 0.0, -2.0, 0.5}), vec({1.0, 0.25, 3.0, 0.5})),
      ConstraintSet::ball(vec({0.5, -0.5, 0.0, 1.0}), 1.5),
      ConstraintSet::simplex(4),
  };
}

}  // namespace

TEST_CASE("projection anchors") {
  const auto ball = ConstraintSet::ball(vec({0.0, 0.0}), 1.0);
  CHECK((ball.project(vec({3.0, 4.0})) - vec({0.6, 0.8})).norm() <= 1e-15);

  const auto box = ConstraintSet::box(vec({0.0, 0.0}), vec({1.0, 1.0}));
  CHECK((box.project(vec({0.5, 0.5})) - vec({0.5, 0.5})).norm() == 0.0);

  // Two-variable KKT by active-set enumeration gives (1, 0) for p = (2, 0):
  // the unrestricted threshold tau solves (2 - tau) + (0 - tau) = 1 but makes
  // the second coordinate negative, so the active solution is tau = 1.
  const auto simplex = ConstraintSet::simplex(2);
  CHECK((simplex.project(vec({2.0, 0.0})) - vec({1.0, 0.0})).norm() <= 1e-14);
}

TEST_CASE("projection errors") {
  const auto ball = ConstraintSet::ball(vec({0.0, 0.0}), 1.0);
  CHECK_THROWS_AS(ball.project(vec({1.0, 2.0, 3.0})), std::invalid_argument);
  Vector bad = vec({1.0, std::numeric_limits<double>::quiet_NaN()});
  CHECK_THROWS_AS(ball.project(bad), std::invalid_argument);
  CHECK_THROWS_AS(ConstraintSet::ball(vec({0.0}), -1.0), std::invalid_argument);
  CHECK_THROWS_AS(ConstraintSet::box(vec({1.0}), vec({0.0})), std::invalid_argument);
}

TEST_CASE("projection is non-expansive") {
  std::mt19937_64 rng(7);
  for (const auto& set : sample_sets()) {
    for (int i = 0; i < 1000; ++i) {
      const Vector a = random_vector(rng, set.dim(), 5.0);
      const Vector b = random_vector(rng, set.dim(), 5.0);
      CHECK((set.project(a) - set.project(b)).norm() <= (a - b).norm() + 1e-12);
    }
  }
}

TEST_CASE("projection optimality against feasible competitors") {
  std::mt19937_64 rng(11);
  for (const auto& set : sample_sets()) {
    for (int i = 0; i < 20; ++i) {
      const Vector p = random_vector(rng, set.dim(), 5.0);
      const Vector proj = set.project(p);
      for (int j = 0; j < 100; ++j) {
        const Vector q = set.project(random_vector(rng, set.dim(), 5.0));
        CHECK((p - proj).norm() <= (p - q).norm() + 1e-10);
      }
    }
  }
}

TEST_CASE("simplex projection is a probability vector") {
  std::mt19937_64 rng(13);
  for (int dim : {2, 3, 7, 50}) {
    const auto set = ConstraintSet::simplex(dim);
    for (int i = 0; i < 200; ++i) {
      const Vector out = set.project(random_vector(rng, dim, 10.0));
      CHECK(std::abs(out.sum() - 1.0) <= 1e-12);
      CHECK(out.minCoeff() >= 0.0);
      // Idempotence.
      CHECK((set.project(out) - out).norm() <= 1e-12);
    }
  }
}

TEST_CASE("diameters") {
  CHECK(!ConstraintSet::whole_space(3).diameter().has_value());
  CHECK(*ConstraintSet::box(vec({0.0, 0.0}), vec({1.0, 1.0})).diameter() ==
        doctest::Approx(std::sqrt(2.0)));
  CHECK(*ConstraintSet::ball(vec({1.0}), 2.0).diameter() == doctest::Approx(4.0));
  CHECK(*ConstraintSet::simplex(3).diameter() == doctest::Approx(std::sqrt(2.0)));
  CHECK(*ConstraintSet::simplex(1).diameter() == doctest::Approx(0.0));
}

TEST_CASE("gradient mapping norm") {
  CHECK(grad_mapping_norm(ConstraintSet::whole_space(1), vec({1.0}), vec({2.0}), 0.5) ==
        doctest::Approx(2.0));
  CHECK(grad_mapping_norm(ConstraintSet::box(vec({0.0}), vec({1.0})), vec({0.0}), vec({3.0}),
                          1.0) == doctest::Approx(0.0));
  // p - g = (2, 0) projects back onto (1, 0) = p.
  CHECK(grad_mapping_norm(ConstraintSet::ball(vec({0.0, 0.0}), 1.0), vec({1.0, 0.0}),
                          vec({-1.0, 0.0}), 1.0) == doctest::Approx(0.0));
  CHECK_THROWS_AS(
      grad_mapping_norm(ConstraintSet::whole_space(1), vec({1.0}), vec({2.0}), 0.0),
      std::invalid_argument);
}

namespace {

MinimaxProblem tiny_problem() {
  MinimaxProblem p{
      [](const Vector& x, const Vector& y) { return x[0] * x[0] - y[0] * y[0]; },
      [](const Vector& x, const Vector&) -> Vector { return 2.0 * x; },
      [](const Vector&, const Vector& y) -> Vector { return -2.0 * y; },
      ConstraintSet::whole_space(1),
      ConstraintSet::whole_space(1),
      SmoothnessProfile{2.0, 2.0, 2.0, std::nullopt, std::nullopt},
      nullptr};
  return p;
}

}  // namespace

TEST_CASE("counted wrapper tallies and stays transparent") {
  const MinimaxProblem base = tiny_problem();
  OracleCounter counter;
  const MinimaxProblem wrapped = counted(base, counter);
  const Vector x = vec({1.5}), y = vec({-2.0});

  CHECK(counter.grad_x_calls == 0);
  CHECK(counter.grad_y_calls == 0);
  CHECK(counter.value_calls == 0);

  (void)wrapped.grad_x(x, y);
  CHECK(counter.grad_x_calls == 1);

  (void)wrapped.grad_x(x, y);
  (void)wrapped.grad_x(x, y);
  (void)wrapped.grad_y(x, y);
  (void)wrapped.grad_y(x, y);
  CHECK(counter.grad_x_calls == 3);
  CHECK(counter.grad_y_calls == 2);
  CHECK(counter.value_calls == 0);
  CHECK(counter.gradient_total() == 5);

  CHECK(wrapped.value(x, y) == base.value(x, y));
  CHECK((wrapped.grad_x(x, y) - base.grad_x(x, y)).norm() == 0.0);
  CHECK((wrapped.grad_y(x, y) - base.grad_y(x, y)).norm() == 0.0);
  CHECK(counter.value_calls == 1);
}
