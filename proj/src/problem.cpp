// Copyright 2026 Minimax Solvers Contributors
// Licensed under the Apache License, Version 2.0
#include "minimax/problem.hpp"

namespace minimax {

MinimaxProblem counted(const MinimaxProblem& problem, OracleCounter& counter) {
  MinimaxProblem wrapped = problem;
  OracleCounter* c = &counter;
  auto value = problem.value;
  auto gx = problem.grad_x;
  auto gy = problem.grad_y;
  wrapped.value = [c, value](const Vector& x, const Vector& y) {
    ++c->value_calls;
    return value(x, y);
  };
  wrapped.grad_x = [c, gx](const Vector& x, const Vector& y) {
    ++c->grad_x_calls;
    return gx(x, y);
  };
  wrapped.grad_y = [c, gy](const Vector& x, const Vector& y) {
    ++c->grad_y_calls;
    return gy(x, y);
  };
  return wrapped;
}

}  // namespace minimax
