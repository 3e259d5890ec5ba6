#pragma once

#include <cstddef>
#include <vector>

namespace qesa {

enum class Scale { Linear, Log };

struct SweepSpec {
  double alpha = 1.0;
  double gamma_min = 0.5;
  double gamma_max = 5.0;
  std::size_t steps = 10;
  Scale scale = Scale::Linear;
};

/// Throws DomainError unless 0 < gamma_min < gamma_max and steps >= 2.
void validate(const SweepSpec& spec);
/// steps samples from gamma_min to gamma_max inclusive, ascending.
std::vector<double> gamma_samples(const SweepSpec& spec);

/// One gamma sample of the analytic-vs-numeric comparison. beta comes from
/// the principal root, so the potential sits on the constraint surface.
/// Oracle failures leave NaN in the affected columns.
struct ComparisonRecord {
  double alpha = 0.0;
  double gamma = 0.0;
  double beta = 0.0;
  double e0_analytic = 0.0;
  double e0_fock = 0.0;
  double e0_grid = 0.0;
  double delta_fock = 0.0;  // e0_analytic - e0_fock
  double delta_grid = 0.0;  // e0_analytic - e0_grid
  bool fock_converged = false;
  bool grid_converged = false;
};

ComparisonRecord compare_point(double alpha, double gamma, double tol);

std::vector<ComparisonRecord> compare_sweep_serial(const SweepSpec& spec, double tol);
/// Same records as the serial version, computed with an OpenMP worker pool.
/// threads = 0 means "default" (see worker_count).
std::vector<ComparisonRecord> compare_sweep_parallel(const SweepSpec& spec, double tol,
                                                     int threads = 0);

struct SurfaceSpec {
  double alpha_min = -5.0;
  double alpha_max = 5.0;
  std::size_t alpha_steps = 20;
  double gamma_min = 0.25;
  double gamma_max = 5.0;
  std::size_t gamma_steps = 20;
};

void validate(const SurfaceSpec& spec);

struct SurfaceRecord {
  double alpha = 0.0;
  double gamma = 0.0;
  double beta = 0.0;
  double constraint_residual = 0.0;  // absolute, PlusBeta form
  bool ok = false;
};

/// Row-major over alpha (outer) then gamma (inner).
std::vector<SurfaceRecord> surface_serial(const SurfaceSpec& spec);
std::vector<SurfaceRecord> surface_parallel(const SurfaceSpec& spec, int threads = 0);

/// Worker count for the parallel kernels: `requested` when positive,
/// otherwise the OpenMP default, capped by the QESA_THREADS environment
/// variable when it holds a positive integer.
int worker_count(int requested = 0);

}  // namespace qesa
