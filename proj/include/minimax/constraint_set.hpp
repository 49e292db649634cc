// Copyright 2026 Minimax Solvers Contributors
// Licensed under the Apache License, Version 2.0
#pragma once

#include <optional>
#include <variant>

#include "minimax/types.hpp"

namespace minimax {

// Closed convex sets with exact Euclidean projection. Immutable value type.
class ConstraintSet {
 public:
  struct WholeSpace {
    int dim;
  };
  struct Box {
    Vector lower;
    Vector upper;
  };
  struct Ball {
    Vector center;
    double radius;
  };
  struct Simplex {
    int dim;
  };

  static ConstraintSet whole_space(int dim);
  static ConstraintSet box(Vector lower, Vector upper);
  static ConstraintSet ball(Vector center, double radius);
  static ConstraintSet simplex(int dim);

  int dim() const;

  // Euclidean diameter; empty for the whole space.
  std::optional<double> diameter() const;

  // Exact Euclidean projection (simplex uses the sort-based threshold method).
  Vector project(const Vector& p) const;

  bool contains(const Vector& p, double tol = 1e-12) const;

  // A deterministic feasible point: midpoint / center / uniform weights / origin.
  Vector feasible_point() const;

  bool is_bounded() const { return diameter().has_value(); }

  const std::variant<WholeSpace, Box, Ball, Simplex>& data() const { return data_; }

 private:
  explicit ConstraintSet(std::variant<WholeSpace, Box, Ball, Simplex> data)
      : data_(std::move(data)) {}
  std::variant<WholeSpace, Box, Ball, Simplex> data_;
};

// Exact projection of p onto the set.
Vector project(const ConstraintSet& set, const Vector& p);

// Norm of the gradient mapping: (1/step) * ||p - P(p - step * g)||.
double grad_mapping_norm(const ConstraintSet& set, const Vector& p, const Vector& g, double step);

}  // namespace minimax
