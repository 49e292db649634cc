// Copyright 2026 Minimax Solvers Contributors
// Licensed under the Apache License, Version 2.0
#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "minimax/problem.hpp"

namespace minimax {

enum class Family {
  QuadraticScsc,    // 0.5 x'Px + x'Ay - 0.5 y'Qy + b'x + c'y, SCSC
  BilinearSimplex,  // x'Ay on probability simplices, convex-concave
  SccBilinear,      // (mu_x/2)||x-b||^2 + x'Ay, Y = ball(0, D/2), strongly-convex-concave
  NcScSin,          // sum sin(x_i) + x'y - (mu_y/2)||y||^2, Y = box(+-r), NC-SC
  NcCToy,           // sum sin(x_i) + x'y, Y = box(+-r), NC-C
};

const char* to_string(Family f);
std::optional<Family> family_from_string(const std::string& name);

struct ProblemSpec {
  Family family = Family::QuadraticScsc;
  int dim_x = 1;
  int dim_y = 1;
  std::uint64_t seed = 0;

  // quadratic_scsc: explicit data wins; otherwise a seeded random instance with
  // the requested moduli, or the exact-kappa diagonal construction when both
  // kappa targets are set (requires dim >= 3 and dim_x == dim_y).
  std::optional<Eigen::MatrixXd> P, A, Q;
  std::optional<Vector> b, c;
  double mu_x = 1.0;
  double mu_y = 1.0;
  std::optional<double> kappa_x, kappa_y;

  double scc_diameter = 2.0;  // scc_bilinear: Y = ball(0, D/2)
  double box_radius = 1.0;    // nc families: Y = box(+-r)
};

// Instantiates the family with exact profile constants and closed-form
// reference data (saddle point, inner max/min evaluators) where the family
// admits them.
MinimaxProblem make(const ProblemSpec& spec);

struct SweepFixed {
  double kappa_x = 10.0;
  double kappa_y = 10.0;
  bool sweep_is_x = false;  // false: kappa_values vary kappa_y; true: kappa_x
  int dim = 4;
  std::uint64_t seed = 0;
};

// Diagonal quadratic instances hitting the requested condition numbers exactly
// (spectral norm 1 by construction). Only Family::QuadraticScsc is supported.
std::vector<ProblemSpec> condition_sweep(Family family, const std::vector<double>& kappa_values,
                                         const SweepFixed& fixed);

}  // namespace minimax
