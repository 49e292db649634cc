// Copyright 2026 Minimax Solvers Contributors
// Licensed under the Apache License, Version 2.0
#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace minimax {

// Dense real vector; every solver in this library works on finite doubles.
using Vector = Eigen::VectorXd;

enum class Status {
  Ok,
  BudgetExhausted,
  NumericalFailure,
  Uncertifiable,
  InvalidConfig,
};

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Ok: return "ok";
    case Status::BudgetExhausted: return "budget_exhausted";
    case Status::NumericalFailure: return "numerical_failure";
    case Status::Uncertifiable: return "uncertifiable";
    case Status::InvalidConfig: return "invalid_config";
  }
  return "unknown";
}

inline bool is_finite(const Vector& v) { return v.allFinite(); }
inline bool is_finite(double x) { return std::isfinite(x); }

// Thrown when a certificate cannot be computed by any supported method.
class UncertifiableError : public std::runtime_error {
 public:
  explicit UncertifiableError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace minimax
