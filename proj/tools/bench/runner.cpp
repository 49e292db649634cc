// Copyright 2026 Minimax Solvers Contributors
// Licensed under the Apache License, Version 2.0
#include "bench/runner.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <thread>

#include "minimax/appa.hpp"
#include "minimax/drivers.hpp"
#include "minimax/general_iteration.hpp"
#include "minimax/maximin_ag2.hpp"
#include "minimax/metrics.hpp"

namespace minimax::bench {

const char* const kCsvHeader =
    "solver,problem,dim_x,dim_y,kappa_x,kappa_y,eps,mode,seed,grad_x_calls,grad_y_calls,"
    "outer_iters,certificate,cert_error,wall_time_ms,status,clamped";

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string csv_row(const RunRecord& r) {
  std::string out;
  out += r.solver;
  out += ',';
  out += r.problem;
  out += ',';
  out += std::to_string(r.dim_x);
  out += ',';
  out += std::to_string(r.dim_y);
  out += ',';
  out += format_double(r.kappa_x);
  out += ',';
  out += format_double(r.kappa_y);
  out += ',';
  out += format_double(r.eps);
  out += ',';
  out += r.mode;
  out += ',';
  out += std::to_string(r.seed);
  out += ',';
  out += std::to_string(r.grad_x_calls);
  out += ',';
  out += std::to_string(r.grad_y_calls);
  out += ',';
  out += std::to_string(r.outer_iters);
  out += ',';
  out += format_double(r.certificate);
  out += ',';
  out += format_double(r.cert_error);
  out += ',';
  out += std::to_string(r.wall_time_ms);
  out += ',';
  out += r.status;
  out += ',';
  out += r.clamped ? "yes" : "no";
  return out;
}

nlohmann::ordered_json record_to_json(const RunRecord& r) {
  nlohmann::ordered_json j;
  j["solver"] = r.solver;
  j["problem"] = r.problem;
  j["dim_x"] = r.dim_x;
  j["dim_y"] = r.dim_y;
  j["kappa_x"] = r.kappa_x;
  j["kappa_y"] = r.kappa_y;
  j["eps"] = r.eps;
  j["mode"] = r.mode;
  j["seed"] = r.seed;
  j["T"] = r.T;
  j["grad_x_calls"] = r.grad_x_calls;
  j["grad_y_calls"] = r.grad_y_calls;
  j["value_calls"] = r.value_calls;
  j["grad_total"] = r.grad_x_calls + r.grad_y_calls;
  j["outer_iters"] = r.outer_iters;
  j["wall_time_ms"] = r.wall_time_ms;
  j["status"] = r.status;
  j["certificate"] = r.certificate;
  j["cert_error"] = r.cert_error;
  j["clamped"] = r.clamped ? "yes" : "no";
  nlohmann::ordered_json ledger = nlohmann::ordered_json::array();
  for (const auto& e : r.ledger.entries) {
    nlohmann::ordered_json item;
    item["name"] = e.name;
    item["theoretical"] = e.theoretical;
    item["applied"] = e.applied;
    item["clamped"] = e.clamped;
    ledger.push_back(item);
  }
  j["tolerance_ledger"] = ledger;
  return j;
}

namespace {

struct ReferenceBounds {
  double gap0_upper = 0.0;   // upper bound on Phi(x0) - Phi* (+ quadratic term)
  double delta_phi = 0.0;    // Phi(x0) - min Phi
  bool valid = false;
};

ReferenceBounds reference_bounds(const MinimaxProblem& p, const Vector& x0, const Vector& y0) {
  ReferenceBounds out;
  if (!p.reference) return out;
  const auto& ref = *p.reference;
  if (ref.phi && ref.phi_min) {
    const auto phi0 = ref.phi(x0);
    if (phi0) {
      out.delta_phi = *phi0 - *ref.phi_min;
      out.gap0_upper = 1.5 * std::max(out.delta_phi, 1e-6) + 1.0;
      out.valid = true;
      return out;
    }
  }
  if (ref.phi && ref.psi) {
    const auto phi0 = ref.phi(x0);
    const auto psi0 = ref.psi(y0);
    if (phi0 && psi0) {
      out.delta_phi = *phi0 - *psi0;  // weak duality
      out.gap0_upper = 1.5 * std::max(out.delta_phi, 1e-6) + 1.0;
      out.valid = true;
    }
  }
  return out;
}

long long default_T(const std::string& solver, const MinimaxProblem& p, const Vector& x0,
                    const Vector& y0, double eps) {
  const auto bounds = reference_bounds(p, x0, y0);
  if (!bounds.valid)
    throw ConfigError("solver '" + solver +
                      "' needs an explicit T for problems without closed-form references");
  const double ell = p.profile.ell;
  if (solver == "minimax_appa")
    return suggest_T(p.profile.kappa_x(), bounds.gap0_upper, eps / 2.0);
  if (solver == "scc_solve")
    return suggest_T(p.profile.kappa_x(), bounds.gap0_upper, eps / 4.0);
  if (solver == "cc_solve") {
    const double dx = p.set_x.diameter().value_or(1.0);
    return suggest_T(4.0 * ell * dx * dx / eps, bounds.gap0_upper, eps / 4.0);
  }
  if (solver == "minimax_ppa" || solver == "nsc_accelerated")
    return suggest_T_ppa(ell, bounds.delta_phi, eps);
  if (solver == "nc_solve" || solver == "nc_accelerated")
    return suggest_T_ppa(ell, bounds.delta_phi + eps, eps / 2.0);
  if (solver == "nc_moreau_solve")
    return suggest_T_ppa(ell, bounds.delta_phi + eps, eps / 10.0);
  if (solver == "scsc_near_optimal" || solver == "scc_near_optimal") {
    const double kappa = p.profile.kappa_x();
    return static_cast<long long>(std::ceil(
               20.0 * std::sqrt(kappa) *
               std::log(ell * (bounds.gap0_upper + 1.0) / eps + std::exp(1.0)))) +
           5;
  }
  return 0;
}

void attach_certificate(RunRecord& rec, const std::string& solver, const MinimaxProblem& p,
                        const SolverReport& rep, double eps) {
  const double inner_tol = std::min(1e-6, eps / 100.0);
  try {
    if (solver == "maximin_ag2") {
      if (p.reference && p.reference->phi && p.reference->saddle_value) {
        if (const auto phi = p.reference->phi(rep.x)) {
          rec.certificate = *phi - *p.reference->saddle_value;
          rec.cert_error = 0.0;
          return;
        }
      }
      const auto gap = duality_gap(p, rep.x, *rep.y, inner_tol);
      rec.certificate = gap.value;
      rec.cert_error = gap.error_bound;
      return;
    }
    if (solver == "minimax_appa" || solver == "scc_solve" || solver == "cc_solve" ||
        solver == "scc_near_optimal") {
      const auto gap = duality_gap(p, rep.x, *rep.y, inner_tol);
      rec.certificate = gap.value;
      rec.cert_error = gap.error_bound;
      return;
    }
    if (solver == "minimax_ppa" || solver == "nc_solve") {
      const auto [rx, ry] = stationarity_f(p, rep.x, *rep.y);
      rec.certificate = std::max(rx, ry);
      rec.cert_error = 0.0;
      return;
    }
    if (solver == "nsc_accelerated") {
      const auto cert = phi_grad_norm(p, rep.x, inner_tol);
      rec.certificate = cert.value;
      rec.cert_error = cert.error_bound;
      return;
    }
    if (solver == "nc_moreau_solve" || solver == "nc_accelerated") {
      const auto cert = moreau_grad_norm(p, rep.x, p.profile.ell, inner_tol);
      rec.certificate = cert.value;
      rec.cert_error = cert.error_bound;
      return;
    }
    if (solver == "scsc_near_optimal") {
      if (p.reference && p.reference->x_star && p.reference->y_star) {
        Vector z(rep.x.size() + rep.y->size());
        z << rep.x - *p.reference->x_star, *rep.y - *p.reference->y_star;
        rec.certificate = z.squaredNorm();  // distance-sense saddle quality
        rec.cert_error = 0.0;
        return;
      }
      throw UncertifiableError("scsc_near_optimal needs a reference saddle");
    }
  } catch (const UncertifiableError&) {
    rec.status = to_string(Status::Uncertifiable);
    rec.certificate = std::numeric_limits<double>::quiet_NaN();
    rec.cert_error = std::numeric_limits<double>::quiet_NaN();
  }
}

}  // namespace

RunRecord run_solve(const SolveConfig& cfg) {
  const MinimaxProblem base = make(cfg.problem);
  OracleCounter counter;
  const MinimaxProblem p = counted(base, counter);

  RunRecord rec;
  rec.solver = cfg.solver.name;
  rec.problem = to_string(cfg.problem.family);
  rec.dim_x = base.dim_x();
  rec.dim_y = base.dim_y();
  rec.kappa_x = base.profile.mu_x > 0.0 ? base.profile.kappa_x()
                                        : std::numeric_limits<double>::infinity();
  rec.kappa_y = base.profile.mu_y > 0.0 ? base.profile.kappa_y()
                                        : std::numeric_limits<double>::infinity();
  rec.eps = cfg.solver.eps;
  rec.mode = to_string(cfg.solver.mode);
  rec.seed = cfg.solver.seed.value_or(0);

  const Vector x0 = base.set_x.feasible_point();
  const Vector y0 = base.set_y.feasible_point();
  const double eps = cfg.solver.eps;
  const long long T =
      cfg.solver.T ? *cfg.solver.T : default_T(cfg.solver.name, base, x0, y0, eps);
  rec.T = T;

  DriverOptions driver_opt;
  driver_opt.mode = cfg.solver.mode;
  driver_opt.caps = cfg.caps;
  MaximinOptions maximin_opt;
  maximin_opt.mode = cfg.solver.mode;
  maximin_opt.caps = cfg.caps;
  NearOptimalOptions near_opt;
  near_opt.caps = cfg.caps;

  const auto& prof = base.profile;
  const auto t0 = std::chrono::steady_clock::now();
  SolverReport rep;
  const std::string& name = cfg.solver.name;
  if (name == "maximin_ag2") {
    rep = maximin_ag2(p, x0, y0, prof.ell, prof.mu_x, prof.mu_y, eps, maximin_opt);
  } else if (name == "minimax_appa") {
    rep = minimax_appa(p, x0, y0, prof.ell, prof.mu_x, prof.mu_y, eps, T, driver_opt);
  } else if (name == "scc_solve") {
    rep = scc_solve(p, x0, y0, prof.ell, prof.mu_x, eps, T, driver_opt);
  } else if (name == "cc_solve") {
    rep = cc_solve(p, x0, y0, prof.ell, eps, T, driver_opt);
  } else if (name == "minimax_ppa") {
    rep = minimax_ppa(p, x0, y0, prof.ell, prof.mu_y, eps, T, *cfg.solver.seed, driver_opt);
  } else if (name == "nc_solve") {
    rep = nc_solve(p, x0, y0, prof.ell, eps, T, *cfg.solver.seed, driver_opt);
  } else if (name == "nc_moreau_solve") {
    rep = nc_moreau_solve(p, x0, y0, prof.ell, eps, T, *cfg.solver.seed, driver_opt);
  } else if (name == "scsc_near_optimal") {
    rep = scsc_near_optimal(p, x0, eps, T, near_opt);
  } else if (name == "scc_near_optimal") {
    rep = scc_near_optimal(p, x0, y0, eps, T, near_opt);
  } else if (name == "nsc_accelerated") {
    rep = nsc_accelerated(p, x0, eps, T, *cfg.solver.seed, near_opt);
  } else if (name == "nc_accelerated") {
    rep = nc_accelerated(p, x0, y0, eps, T, *cfg.solver.seed, near_opt);
  } else {
    throw ConfigError("unknown solver: " + name);
  }
  const auto t1 = std::chrono::steady_clock::now();

  rec.grad_x_calls = counter.grad_x_calls;
  rec.grad_y_calls = counter.grad_y_calls;
  rec.value_calls = counter.value_calls;
  rec.outer_iters = rep.outer_iters;
  rec.status = to_string(rep.status);
  rec.ledger = rep.ledger;
  rec.clamped = rep.ledger.any_clamped();
  rec.wall_time_ms =
      cfg.measure_time
          ? std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
          : 0;
  if (rep.status == Status::Ok) {
    attach_certificate(rec, name, base, rep, eps);
  } else {
    rec.certificate = std::numeric_limits<double>::quiet_NaN();
    rec.cert_error = std::numeric_limits<double>::quiet_NaN();
  }
  return rec;
}

std::vector<RunRecord> run_sweep(const SweepConfig& cfg) {
  struct Cell {
    std::string solver;
    double kappa_x;
    double kappa_y;
    double eps;
    std::uint64_t seed;
    std::size_t index;
  };
  std::vector<Cell> cells;
  for (const auto& solver : cfg.solvers)
    for (double kx : cfg.kappa_x)
      for (double ky : cfg.kappa_y)
        for (double eps : cfg.eps)
          for (std::uint64_t seed : cfg.seeds)
            cells.push_back({solver, kx, ky, eps, seed, cells.size()});

  int workers = cfg.workers;
  if (const char* env = std::getenv("MINIMAX_WORKERS")) {
    const int parsed = std::atoi(env);
    if (parsed >= 1) workers = parsed;
  }
  workers = std::min<int>(workers, static_cast<int>(cells.size()));
  if (workers < 1) workers = 1;

  std::vector<RunRecord> rows(cells.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::string first_error;
  std::mutex error_mutex;

  auto work = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cells.size() || failed.load()) break;
      const Cell& cell = cells[i];
      SolveConfig solve;
      solve.problem.family = cfg.family;
      solve.problem.dim_x = cfg.dim;
      solve.problem.dim_y = cfg.dim;
      solve.problem.seed = cfg.problem_seed;
      solve.problem.kappa_x = cell.kappa_x;
      solve.problem.kappa_y = cell.kappa_y;
      solve.solver.name = cell.solver;
      solve.solver.eps = cell.eps;
      // Independent stream per cell even when grid seeds repeat.
      solve.solver.seed = cell.seed ^ (0x9e3779b97f4a7c15ULL * cell.index);
      solve.solver.mode = cfg.mode;
      solve.caps = cfg.caps;
      solve.measure_time = cfg.measure_time;
      try {
        RunRecord rec = run_solve(solve);
        rec.seed = cell.seed;  // report the grid coordinate
        rows[cell.index] = rec;
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!failed.exchange(true)) first_error = e.what();
        break;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (failed.load()) throw ConfigError("sweep cell failed: " + first_error);
  return rows;
}

std::string sweep_to_csv(const std::vector<RunRecord>& rows) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const auto& r : rows) {
    out += csv_row(r);
    out += '\n';
  }
  return out;
}

}  // namespace minimax::bench
