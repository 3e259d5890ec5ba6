#include "qesa/sweep.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include "qesa/analytic.hpp"
#include "qesa/errors.hpp"
#include "qesa/spectral_oracle.hpp"

namespace qesa {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double lerp_sample(double lo, double hi, std::size_t k, std::size_t steps) {
  if (k + 1 == steps) return hi;
  return lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(steps - 1);
}

double surface_alpha(const SurfaceSpec& s, std::size_t i) {
  return s.alpha_steps == 1 ? s.alpha_min : lerp_sample(s.alpha_min, s.alpha_max, i, s.alpha_steps);
}

double surface_gamma(const SurfaceSpec& s, std::size_t j) {
  return s.gamma_steps == 1 ? s.gamma_min : lerp_sample(s.gamma_min, s.gamma_max, j, s.gamma_steps);
}

SurfaceRecord surface_cell(double alpha, double gamma) {
  SurfaceRecord r{alpha, gamma, kNaN, kNaN, false};
  try {
    const auto s = solution_from_root(cardano_principal(alpha, gamma), alpha, gamma, Branch::PlusBeta);
    r.beta = s.beta;
    r.constraint_residual = std::abs(s.constraint_residual);
    r.ok = true;
  } catch (const DomainError&) {
  }
  return r;
}

void require_tol(double tol) {
  if (!(tol >= 1e-10)) throw DomainError("sweep: tolerance must be at least 1e-10");
}

void sort_by_gamma(std::vector<ComparisonRecord>& rows) {
  std::stable_sort(rows.begin(), rows.end(),
                   [](const ComparisonRecord& a, const ComparisonRecord& b) { return a.gamma < b.gamma; });
}

}  // namespace

void validate(const SweepSpec& spec) {
  if (!(spec.gamma_min > 0.0) || !(spec.gamma_min < spec.gamma_max) || !std::isfinite(spec.gamma_max)) {
    throw DomainError("sweep: need 0 < gamma_min < gamma_max");
  }
  if (spec.steps < 2) throw DomainError("sweep: steps must be at least 2");
}

std::vector<double> gamma_samples(const SweepSpec& spec) {
  validate(spec);
  std::vector<double> g(spec.steps);
  for (std::size_t k = 0; k < spec.steps; ++k) {
    if (spec.scale == Scale::Linear) {
      g[k] = lerp_sample(spec.gamma_min, spec.gamma_max, k, spec.steps);
    } else {
      const double lo = std::log(spec.gamma_min);
      const double hi = std::log(spec.gamma_max);
      g[k] = k + 1 == spec.steps ? spec.gamma_max
                                 : std::exp(lo + (hi - lo) * static_cast<double>(k) /
                                                     static_cast<double>(spec.steps - 1));
    }
  }
  g.front() = spec.gamma_min;
  return g;
}

ComparisonRecord compare_point(double alpha, double gamma, double tol) {
  ComparisonRecord r;
  r.alpha = alpha;
  r.gamma = gamma;
  const auto sol = solution_from_root(cardano_principal(alpha, gamma), alpha, gamma, Branch::PlusBeta);
  r.beta = sol.beta;
  r.e0_analytic = sol.e0;
  const PotentialParams params{alpha, sol.beta, gamma};

  auto run = [&](OracleMethod m, double& e0, bool& ok) {
    try {
      e0 = converged_ground(params, tol, m).e0;
      ok = true;
    } catch (const ConvergenceFailure&) {
      e0 = kNaN;
      ok = false;
    }
  };
  run(OracleMethod::Fock, r.e0_fock, r.fock_converged);
  run(OracleMethod::Grid, r.e0_grid, r.grid_converged);
  r.delta_fock = r.e0_analytic - r.e0_fock;
  r.delta_grid = r.e0_analytic - r.e0_grid;
  return r;
}

std::vector<ComparisonRecord> compare_sweep_serial(const SweepSpec& spec, double tol) {
  require_tol(tol);
  const auto gammas = gamma_samples(spec);
  std::vector<ComparisonRecord> rows;
  rows.reserve(gammas.size());
  for (double g : gammas) rows.push_back(compare_point(spec.alpha, g, tol));
  sort_by_gamma(rows);
  return rows;
}

std::vector<ComparisonRecord> compare_sweep_parallel(const SweepSpec& spec, double tol, int threads) {
  require_tol(tol);
  const auto gammas = gamma_samples(spec);
  const auto n = static_cast<std::ptrdiff_t>(gammas.size());
  std::vector<ComparisonRecord> rows(gammas.size());
  // Inputs are validated above; compare_point cannot throw for them.
#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_count(threads))
  for (std::ptrdiff_t k = 0; k < n; ++k) rows[k] = compare_point(spec.alpha, gammas[k], tol);
  sort_by_gamma(rows);
  return rows;
}

void validate(const SurfaceSpec& spec) {
  if (spec.alpha_steps < 1 || spec.gamma_steps < 1) throw DomainError("surface: steps must be positive");
  if (!(spec.gamma_min > 0.0) || spec.gamma_max < spec.gamma_min) {
    throw DomainError("surface: need 0 < gamma_min <= gamma_max");
  }
  if (spec.alpha_max < spec.alpha_min) throw DomainError("surface: need alpha_min <= alpha_max");
}

std::vector<SurfaceRecord> surface_serial(const SurfaceSpec& spec) {
  validate(spec);
  std::vector<SurfaceRecord> out;
  out.reserve(spec.alpha_steps * spec.gamma_steps);
  for (std::size_t i = 0; i < spec.alpha_steps; ++i)
    for (std::size_t j = 0; j < spec.gamma_steps; ++j)
      out.push_back(surface_cell(surface_alpha(spec, i), surface_gamma(spec, j)));
  return out;
}

std::vector<SurfaceRecord> surface_parallel(const SurfaceSpec& spec, int threads) {
  validate(spec);
  const auto na = static_cast<std::ptrdiff_t>(spec.alpha_steps);
  const auto ng = static_cast<std::ptrdiff_t>(spec.gamma_steps);
  std::vector<SurfaceRecord> out(spec.alpha_steps * spec.gamma_steps);
#pragma omp parallel for collapse(2) schedule(static) num_threads(worker_count(threads))
  for (std::ptrdiff_t i = 0; i < na; ++i)
    for (std::ptrdiff_t j = 0; j < ng; ++j)
      out[i * ng + j] = surface_cell(surface_alpha(spec, i), surface_gamma(spec, j));
  return out;
}

int worker_count(int requested) {
  int n = requested > 0 ? requested : omp_get_max_threads();
  if (const char* env = std::getenv("QESA_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap > 0) n = std::min<long>(n, cap);
  }
  return std::max(n, 1);
}

}  // namespace qesa
