// Copyright 2026 Minimax Solvers Contributors
// Licensed under the Apache License, Version 2.0
#include "minimax/problems.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>

namespace minimax {

namespace {

// Portable uniform double in [lo, hi) from raw 64-bit output.
double uniform(std::mt19937_64& rng, double lo, double hi) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + u * (hi - lo);
}

double spectral_norm(const Eigen::MatrixXd& sym) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  return std::max(std::abs(ev.minCoeff()), std::abs(ev.maxCoeff()));
}

double min_eigenvalue(const Eigen::MatrixXd& sym) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

// Random symmetric matrix with spectrum exactly spanning [mu, top]: random
// orthogonal basis, eigenvalues sampled in between with the endpoints pinned.
Eigen::MatrixXd random_spd(int n, double mu, double top, std::mt19937_64& rng) {
  Eigen::MatrixXd raw(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) raw(i, j) = uniform(rng, -1.0, 1.0);
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(raw);
  const Eigen::MatrixXd orth = qr.householderQ();
  Vector evs(n);
  evs[0] = mu;
  if (n > 1) evs[n - 1] = top;
  for (int i = 1; i + 1 < n; ++i) evs[i] = uniform(rng, mu, top);
  return orth * evs.asDiagonal() * orth.transpose();
}

struct QuadraticData {
  Eigen::MatrixXd P, A, Q;
  Vector b, c;
  Eigen::LLT<Eigen::MatrixXd> P_llt, Q_llt;
  Vector x_star, y_star;
};

MinimaxProblem make_quadratic(const Eigen::MatrixXd& P, const Eigen::MatrixXd& A,
                              const Eigen::MatrixXd& Q, const Vector& b, const Vector& c,
                              std::optional<double> exact_ell, std::optional<double> exact_mu_x,
                              std::optional<double> exact_mu_y) {
  const int m = static_cast<int>(P.rows());
  const int n = static_cast<int>(Q.rows());
  if (A.rows() != m || A.cols() != n || b.size() != m || c.size() != n)
    throw std::invalid_argument("quadratic_scsc: inconsistent dimensions");

  auto data = std::make_shared<QuadraticData>();
  data->P = P;
  data->A = A;
  data->Q = Q;
  data->b = b;
  data->c = c;
  data->P_llt.compute(P);
  data->Q_llt.compute(Q);
  if (data->P_llt.info() != Eigen::Success || data->Q_llt.info() != Eigen::Success)
    throw std::invalid_argument("quadratic_scsc: P or Q not positive definite");

  const double mu_x = exact_mu_x ? *exact_mu_x : min_eigenvalue(P);
  const double mu_y = exact_mu_y ? *exact_mu_y : min_eigenvalue(Q);
  if (!(mu_x > 0.0) || !(mu_y > 0.0))
    throw std::invalid_argument("quadratic_scsc: moduli must be positive");

  double ell;
  if (exact_ell) {
    ell = *exact_ell;
  } else {
    Eigen::MatrixXd block(m + n, m + n);
    block.topLeftCorner(m, m) = P;
    block.topRightCorner(m, n) = A;
    block.bottomLeftCorner(n, m) = A.transpose();
    block.bottomRightCorner(n, n) = Q;
    ell = spectral_norm(block);
  }

  // Saddle: grad_x = Px + Ay + b = 0, grad_y = A'x - Qy + c = 0.
  Eigen::MatrixXd kkt(m + n, m + n);
  kkt.topLeftCorner(m, m) = P;
  kkt.topRightCorner(m, n) = A;
  kkt.bottomLeftCorner(n, m) = A.transpose();
  kkt.bottomRightCorner(n, n) = -Q;
  Vector rhs(m + n);
  rhs.head(m) = -b;
  rhs.tail(n) = -c;
  const Vector z = kkt.fullPivLu().solve(rhs);
  data->x_star = z.head(m);
  data->y_star = z.tail(n);

  const double rx = 2.0 * (data->x_star.norm() + 1.0);
  const double ry = 2.0 * (data->y_star.norm() + 1.0);

  MinimaxProblem prob{
      /*value=*/[data](const Vector& x, const Vector& y) {
        return 0.5 * x.dot(data->P * x) + x.dot(data->A * y) - 0.5 * y.dot(data->Q * y) +
               data->b.dot(x) + data->c.dot(y);
      },
      /*grad_x=*/[data](const Vector& x, const Vector& y) -> Vector {
        return data->P * x + data->A * y + data->b;
      },
      /*grad_y=*/[data](const Vector& x, const Vector& y) -> Vector {
        return data->A.transpose() * x - data->Q * y + data->c;
      },
      ConstraintSet::ball(Vector::Zero(m), rx),
      ConstraintSet::ball(Vector::Zero(n), ry),
      SmoothnessProfile{ell, mu_x, mu_y, 2.0 * rx, 2.0 * ry},
      nullptr};

  auto ref = std::make_shared<SaddleReference>();
  ref->x_star = data->x_star;
  ref->y_star = data->y_star;
  ref->saddle_value = prob.value(data->x_star, data->y_star);
  ref->phi_min = ref->saddle_value;
  const ConstraintSet set_x = prob.set_x;
  const ConstraintSet set_y = prob.set_y;
  ref->y_star_of = [data, set_y](const Vector& x) -> std::optional<Vector> {
    const Vector y = data->Q_llt.solve(data->A.transpose() * x + data->c);
    if (!set_y.contains(y, 1e-9)) return std::nullopt;
    return y;
  };
  ref->x_star_of = [data, set_x](const Vector& y) -> std::optional<Vector> {
    const Vector x = data->P_llt.solve(-(data->A * y + data->b));
    if (!set_x.contains(x, 1e-9)) return std::nullopt;
    return x;
  };
  auto value = prob.value;
  ref->phi = [data, set_y, value](const Vector& x) -> std::optional<double> {
    const Vector y = data->Q_llt.solve(data->A.transpose() * x + data->c);
    if (!set_y.contains(y, 1e-9)) return std::nullopt;
    return value(x, y);
  };
  ref->psi = [data, set_x, value](const Vector& y) -> std::optional<double> {
    const Vector x = data->P_llt.solve(-(data->A * y + data->b));
    if (!set_x.contains(x, 1e-9)) return std::nullopt;
    return value(x, y);
  };
  prob.reference = ref;
  return prob;
}

// Exact-kappa diagonal construction: spectral norm pinned to exactly 1 by the
// leading block (p = q = 1 - gamma, coupling gamma = 1/16), minimum
// eigenvalues pinned to 1/kappa on dedicated coordinates.
MinimaxProblem make_quadratic_diagonal(int dim, double kappa_x, double kappa_y,
                                       std::uint64_t seed) {
  if (dim < 3) throw std::invalid_argument("diagonal construction needs dim >= 3");
  if (!(kappa_x >= 1.0) || !(kappa_y >= 1.0))
    throw std::invalid_argument("kappa targets must be >= 1");
  const double gamma = 0.0625;
  const double mu_x = 1.0 / kappa_x;
  const double mu_y = 1.0 / kappa_y;
  const double hi = 0.85;
  const double lo_x = std::min(std::max(0.2, mu_x), hi);
  const double lo_y = std::min(std::max(0.2, mu_y), hi);

  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 1);
  Vector p(dim), q(dim);
  p[0] = 1.0 - gamma;
  q[0] = 1.0 - gamma;
  p[1] = mu_x;
  q[1] = uniform(rng, lo_y, hi);
  p[2] = uniform(rng, lo_x, hi);
  q[2] = mu_y;
  for (int i = 3; i < dim; ++i) {
    p[i] = uniform(rng, lo_x, hi);
    q[i] = uniform(rng, lo_y, hi);
  }
  Vector b(dim), c(dim);
  for (int i = 0; i < dim; ++i) {
    b[i] = uniform(rng, -0.5, 0.5);
    c[i] = uniform(rng, -0.5, 0.5);
  }
  return make_quadratic(p.asDiagonal(), gamma * Eigen::MatrixXd::Identity(dim, dim),
                        q.asDiagonal(), b, c, /*exact_ell=*/1.0, mu_x, mu_y);
}

MinimaxProblem make_bilinear_simplex(const ProblemSpec& spec) {
  Eigen::MatrixXd A;
  if (spec.A) {
    A = *spec.A;
  } else {
    std::mt19937_64 rng(spec.seed * 0x9e3779b97f4a7c15ULL + 2);
    A.resize(spec.dim_x, spec.dim_y);
    for (int i = 0; i < spec.dim_x; ++i)
      for (int j = 0; j < spec.dim_y; ++j) A(i, j) = uniform(rng, -1.0, 1.0);
  }
  const int m = static_cast<int>(A.rows());
  const int n = static_cast<int>(A.cols());
  auto mat = std::make_shared<Eigen::MatrixXd>(A);
  const double ell = std::sqrt(spectral_norm(A.transpose() * A));

  MinimaxProblem prob{
      [mat](const Vector& x, const Vector& y) { return x.dot(*mat * y); },
      [mat](const Vector& x, const Vector& y) -> Vector { (void)x; return *mat * y; },
      [mat](const Vector& x, const Vector& y) -> Vector { (void)y; return mat->transpose() * x; },
      ConstraintSet::simplex(m),
      ConstraintSet::simplex(n),
      SmoothnessProfile{ell, 0.0, 0.0, m > 1 ? std::sqrt(2.0) : 0.0,
                        n > 1 ? std::sqrt(2.0) : 0.0},
      nullptr};

  auto ref = std::make_shared<SaddleReference>();
  ref->phi = [mat](const Vector& x) -> std::optional<double> {
    return (mat->transpose() * x).maxCoeff();
  };
  ref->psi = [mat](const Vector& y) -> std::optional<double> { return (*mat * y).minCoeff(); };
  prob.reference = ref;
  return prob;
}

MinimaxProblem make_scc_bilinear(const ProblemSpec& spec) {
  const int m = spec.dim_x;
  const int n = spec.dim_y;
  std::mt19937_64 rng(spec.seed * 0x9e3779b97f4a7c15ULL + 3);
  Eigen::MatrixXd A;
  if (spec.A) {
    A = *spec.A;
  } else {
    A.resize(m, n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) A(i, j) = uniform(rng, -1.0, 1.0);
  }
  Vector b = spec.b ? *spec.b : Vector::Zero(m);
  const double mu_x = spec.mu_x;
  const double D = spec.scc_diameter;
  if (!(mu_x > 0.0) || !(D > 0.0)) throw std::invalid_argument("scc_bilinear: bad parameters");

  auto mat = std::make_shared<Eigen::MatrixXd>(A);
  auto off = std::make_shared<Vector>(b);
  const double sigma = std::sqrt(spectral_norm(A.transpose() * A));
  const double ell = 0.5 * (mu_x + std::sqrt(mu_x * mu_x + 4.0 * sigma * sigma));

  MinimaxProblem prob{
      [mat, off, mu_x](const Vector& x, const Vector& y) {
        return 0.5 * mu_x * (x - *off).squaredNorm() + x.dot(*mat * y);
      },
      [mat, off, mu_x](const Vector& x, const Vector& y) -> Vector {
        return mu_x * (x - *off) + *mat * y;
      },
      [mat](const Vector& x, const Vector& y) -> Vector { (void)y; return mat->transpose() * x; },
      ConstraintSet::whole_space(m),
      ConstraintSet::ball(Vector::Zero(n), D / 2.0),
      SmoothnessProfile{ell, mu_x, 0.0, std::nullopt, D},
      nullptr};

  auto ref = std::make_shared<SaddleReference>();
  ref->phi = [mat, off, mu_x, D](const Vector& x) -> std::optional<double> {
    return 0.5 * mu_x * (x - *off).squaredNorm() + 0.5 * D * (mat->transpose() * x).norm();
  };
  ref->psi = [mat, off, mu_x](const Vector& y) -> std::optional<double> {
    const Vector ay = *mat * y;
    return off->dot(ay) - ay.squaredNorm() / (2.0 * mu_x);
  };
  ref->x_star_of = [mat, off, mu_x](const Vector& y) -> std::optional<Vector> {
    return Vector(*off - (*mat * y) / mu_x);
  };
  ref->y_star_of = [mat, D](const Vector& x) -> std::optional<Vector> {
    const Vector atx = mat->transpose() * x;
    const double norm = atx.norm();
    if (norm < 1e-14) return Vector(Vector::Zero(mat->cols()));
    return Vector((0.5 * D / norm) * atx);
  };
  prob.reference = ref;
  return prob;
}

// 1-D global minimum of t -> f(t) over [-10, 10] by dense grid plus golden
// section refinement; deterministic.
double argmin_1d(const std::function<double(double)>& f) {
  double best_t = 0.0;
  double best_v = f(0.0);
  const int grid = 20001;
  for (int i = 0; i < grid; ++i) {
    const double t = -10.0 + 20.0 * i / (grid - 1);
    const double v = f(t);
    if (v < best_v) {
      best_v = v;
      best_t = t;
    }
  }
  double a = best_t - 2e-3, b = best_t + 2e-3;
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - invphi * (b - a), d = a + invphi * (b - a);
  for (int it = 0; it < 200 && (b - a) > 1e-14; ++it) {
    if (f(c) < f(d)) {
      b = d;
    } else {
      a = c;
    }
    c = b - invphi * (b - a);
    d = a + invphi * (b - a);
  }
  return 0.5 * (a + b);
}

MinimaxProblem make_nc_sin(const ProblemSpec& spec, bool strongly_concave) {
  const int n = spec.dim_x;
  if (spec.dim_y != n) throw std::invalid_argument("sin families pair x and y coordinates");
  const double r = spec.box_radius;
  const double mu_y = strongly_concave ? spec.mu_y : 0.0;
  if (strongly_concave && !(mu_y > 0.0))
    throw std::invalid_argument("nc_sc_sin: mu_y must be positive");
  if (!(r > 0.0)) throw std::invalid_argument("sin families: box radius must be positive");

  // Worst-case curvature of the coordinate pair block [[s, 1], [1, -mu_y]], s = +-1.
  double ell = 0.0;
  for (const double s : {-1.0, 1.0}) {
    const double tr = s - mu_y;
    const double root = std::sqrt((s + mu_y) * (s + mu_y) + 4.0);
    ell = std::max({ell, std::abs(0.5 * (tr + root)), std::abs(0.5 * (tr - root))});
  }

  MinimaxProblem prob{
      [mu_y](const Vector& x, const Vector& y) {
        return x.array().sin().sum() + x.dot(y) - 0.5 * mu_y * y.squaredNorm();
      },
      [](const Vector& x, const Vector& y) -> Vector {
        return Vector(x.array().cos().matrix() + y);
      },
      [mu_y](const Vector& x, const Vector& y) -> Vector { return x - mu_y * y; },
      ConstraintSet::whole_space(n),
      ConstraintSet::box(Vector::Constant(n, -r), Vector::Constant(n, r)),
      SmoothnessProfile{ell, 0.0, mu_y, std::nullopt, 2.0 * r * std::sqrt(double(n))},
      nullptr};

  auto ref = std::make_shared<SaddleReference>();
  if (strongly_concave) {
    ref->y_star_of = [mu_y, r](const Vector& x) -> std::optional<Vector> {
      return Vector((x / mu_y).cwiseMax(-r).cwiseMin(r));
    };
    auto huber = [mu_y, r](double t) {
      return std::abs(t) <= mu_y * r ? t * t / (2.0 * mu_y) : r * std::abs(t) - 0.5 * mu_y * r * r;
    };
    ref->phi = [huber](const Vector& x) -> std::optional<double> {
      double v = 0.0;
      for (int i = 0; i < x.size(); ++i) v += std::sin(x[i]) + huber(x[i]);
      return v;
    };
    double tmin = argmin_1d([huber](double t) { return std::sin(t) + huber(t); });
    // Bisection on the derivative pins the stationary point to full precision.
    auto dphi = [mu_y, r](double t) {
      const double hprime = std::abs(t) <= mu_y * r ? t / mu_y : r * (t > 0 ? 1.0 : -1.0);
      return std::cos(t) + hprime;
    };
    {
      double a = tmin - 1e-3, b = tmin + 1e-3;
      if (dphi(a) * dphi(b) < 0.0) {
        for (int it = 0; it < 200 && b - a > 1e-16; ++it) {
          const double mid = 0.5 * (a + b);
          if (dphi(a) * dphi(mid) <= 0.0) {
            b = mid;
          } else {
            a = mid;
          }
        }
        tmin = 0.5 * (a + b);
      }
    }
    ref->phi_min = n * (std::sin(tmin) + huber(tmin));
    ref->x_star = Vector::Constant(n, tmin);
    ref->y_star = Vector((ref->x_star->array() / mu_y).cwiseMax(-r).cwiseMin(r));
  } else {
    ref->phi = [r](const Vector& x) -> std::optional<double> {
      return x.array().sin().sum() + r * x.lpNorm<1>();
    };
    const double tmin = argmin_1d([r](double t) { return std::sin(t) + r * std::abs(t); });
    ref->phi_min = n * (std::sin(tmin) + r * std::abs(tmin));
  }
  prob.reference = ref;
  return prob;
}

}  // namespace

const char* to_string(Family f) {
  switch (f) {
    case Family::QuadraticScsc: return "quadratic_scsc";
    case Family::BilinearSimplex: return "bilinear_simplex";
    case Family::SccBilinear: return "scc_bilinear";
    case Family::NcScSin: return "nc_sc_sin";
    case Family::NcCToy: return "nc_c_toy";
  }
  return "unknown";
}

std::optional<Family> family_from_string(const std::string& name) {
  for (Family f : {Family::QuadraticScsc, Family::BilinearSimplex, Family::SccBilinear,
                   Family::NcScSin, Family::NcCToy})
    if (name == to_string(f)) return f;
  return std::nullopt;
}

MinimaxProblem make(const ProblemSpec& spec) {
  switch (spec.family) {
    case Family::QuadraticScsc: {
      if (spec.P || spec.A || spec.Q) {
        if (!spec.P || !spec.A || !spec.Q)
          throw std::invalid_argument("quadratic_scsc: provide all of P, A, Q");
        const Vector b = spec.b ? *spec.b : Vector::Zero(spec.P->rows());
        const Vector c = spec.c ? *spec.c : Vector::Zero(spec.Q->rows());
        return make_quadratic(*spec.P, *spec.A, *spec.Q, b, c, std::nullopt, std::nullopt,
                              std::nullopt);
      }
      if (spec.kappa_x && spec.kappa_y)
        return make_quadratic_diagonal(spec.dim_x, *spec.kappa_x, *spec.kappa_y, spec.seed);
      std::mt19937_64 rng(spec.seed * 0x9e3779b97f4a7c15ULL + 4);
      const Eigen::MatrixXd P = random_spd(spec.dim_x, spec.mu_x, 1.0, rng);
      const Eigen::MatrixXd Q = random_spd(spec.dim_y, spec.mu_y, 1.0, rng);
      Eigen::MatrixXd A(spec.dim_x, spec.dim_y);
      for (int i = 0; i < spec.dim_x; ++i)
        for (int j = 0; j < spec.dim_y; ++j) A(i, j) = uniform(rng, -0.3, 0.3);
      Vector b(spec.dim_x), c(spec.dim_y);
      for (int i = 0; i < spec.dim_x; ++i) b[i] = uniform(rng, -0.5, 0.5);
      for (int j = 0; j < spec.dim_y; ++j) c[j] = uniform(rng, -0.5, 0.5);
      return make_quadratic(P, A, Q, b, c, std::nullopt, spec.mu_x, spec.mu_y);
    }
    case Family::BilinearSimplex: return make_bilinear_simplex(spec);
    case Family::SccBilinear: return make_scc_bilinear(spec);
    case Family::NcScSin: return make_nc_sin(spec, true);
    case Family::NcCToy: return make_nc_sin(spec, false);
  }
  throw std::invalid_argument("make: unknown family");
}

std::vector<ProblemSpec> condition_sweep(Family family, const std::vector<double>& kappa_values,
                                         const SweepFixed& fixed) {
  if (family != Family::QuadraticScsc)
    throw std::invalid_argument("condition_sweep: only quadratic_scsc is supported");
  std::vector<ProblemSpec> out;
  out.reserve(kappa_values.size());
  for (std::size_t i = 0; i < kappa_values.size(); ++i) {
    ProblemSpec spec;
    spec.family = Family::QuadraticScsc;
    spec.dim_x = fixed.dim;
    spec.dim_y = fixed.dim;
    spec.seed = fixed.seed + i;
    spec.kappa_x = fixed.sweep_is_x ? kappa_values[i] : fixed.kappa_x;
    spec.kappa_y = fixed.sweep_is_x ? fixed.kappa_y : kappa_values[i];
    out.push_back(spec);
  }
  return out;
}

}  // namespace minimax
