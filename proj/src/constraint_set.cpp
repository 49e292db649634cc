// Copyright 2026 Minimax Solvers Contributors
// Licensed under the Apache License, Version 2.0
#include "minimax/constraint_set.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace minimax {

namespace {

void require_finite(const Vector& v, const char* what) {
  if (!is_finite(v)) throw std::invalid_argument(std::string(what) + ": non-finite input");
}

// Sort-based threshold projection onto the probability simplex.
Vector project_simplex(const Vector& p) {
  const int n = static_cast<int>(p.size());
  std::vector<double> u(p.data(), p.data() + n);
  std::sort(u.begin(), u.end(), std::greater<double>());
  double running = 0.0;
  double tau = 0.0;
  int rho = 0;
  for (int j = 0; j < n; ++j) {
    running += u[j];
    const double candidate = (running - 1.0) / (j + 1);
    if (u[j] - candidate > 0.0) {
      rho = j + 1;
      tau = candidate;
    }
  }
  Vector out(n);
  for (int i = 0; i < n; ++i) out[i] = std::max(p[i] - tau, 0.0);
  (void)rho;
  return out;
}

}  // namespace

ConstraintSet ConstraintSet::whole_space(int dim) {
  if (dim < 1) throw std::invalid_argument("whole_space: dim must be >= 1");
  return ConstraintSet(WholeSpace{dim});
}

ConstraintSet ConstraintSet::box(Vector lower, Vector upper) {
  if (lower.size() != upper.size() || lower.size() < 1)
    throw std::invalid_argument("box: bound dimensions mismatch");
  require_finite(lower, "box lower");
  require_finite(upper, "box upper");
  if ((lower.array() > upper.array()).any())
    throw std::invalid_argument("box: lower must be <= upper componentwise");
  return ConstraintSet(Box{std::move(lower), std::move(upper)});
}

ConstraintSet ConstraintSet::ball(Vector center, double radius) {
  if (center.size() < 1) throw std::invalid_argument("ball: dim must be >= 1");
  require_finite(center, "ball center");
  if (!(radius > 0.0) || !std::isfinite(radius))
    throw std::invalid_argument("ball: radius must be positive and finite");
  return ConstraintSet(Ball{std::move(center), radius});
}

ConstraintSet ConstraintSet::simplex(int dim) {
  if (dim < 1) throw std::invalid_argument("simplex: dim must be >= 1");
  return ConstraintSet(Simplex{dim});
}

int ConstraintSet::dim() const {
  return std::visit(
      [](const auto& s) -> int {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, WholeSpace>) return s.dim;
        if constexpr (std::is_same_v<T, Box>) return static_cast<int>(s.lower.size());
        if constexpr (std::is_same_v<T, Ball>) return static_cast<int>(s.center.size());
        if constexpr (std::is_same_v<T, Simplex>) return s.dim;
      },
      data_);
}

std::optional<double> ConstraintSet::diameter() const {
  return std::visit(
      [](const auto& s) -> std::optional<double> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, WholeSpace>) {
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, Box>) {
          return (s.upper - s.lower).norm();
        } else if constexpr (std::is_same_v<T, Ball>) {
          return 2.0 * s.radius;
        } else {
          // Farthest vertex pair e_i, e_j; a one-point simplex has diameter 0.
          return s.dim > 1 ? std::optional<double>(std::sqrt(2.0)) : std::optional<double>(0.0);
        }
      },
      data_);
}

Vector ConstraintSet::project(const Vector& p) const {
  if (p.size() != dim()) throw std::invalid_argument("project: dimension mismatch");
  require_finite(p, "project");
  return std::visit(
      [&](const auto& s) -> Vector {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, WholeSpace>) {
          return p;
        } else if constexpr (std::is_same_v<T, Box>) {
          return p.cwiseMax(s.lower).cwiseMin(s.upper);
        } else if constexpr (std::is_same_v<T, Ball>) {
          const Vector d = p - s.center;
          const double n = d.norm();
          if (n <= s.radius) return p;
          return s.center + d * (s.radius / n);
        } else {
          return project_simplex(p);
        }
      },
      data_);
}

bool ConstraintSet::contains(const Vector& p, double tol) const {
  if (p.size() != dim()) return false;
  if (!is_finite(p)) return false;
  return (p - project(p)).norm() <= tol;
}

Vector ConstraintSet::feasible_point() const {
  return std::visit(
      [](const auto& s) -> Vector {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, WholeSpace>) {
          return Vector::Zero(s.dim);
        } else if constexpr (std::is_same_v<T, Box>) {
          return 0.5 * (s.lower + s.upper);
        } else if constexpr (std::is_same_v<T, Ball>) {
          return s.center;
        } else {
          return Vector::Constant(s.dim, 1.0 / s.dim);
        }
      },
      data_);
}

Vector project(const ConstraintSet& set, const Vector& p) { return set.project(p); }

double grad_mapping_norm(const ConstraintSet& set, const Vector& p, const Vector& g, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("grad_mapping_norm: step must be positive");
  require_finite(p, "grad_mapping_norm p");
  require_finite(g, "grad_mapping_norm g");
  return (p - set.project(p - step * g)).norm() / step;
}

}  // namespace minimax
