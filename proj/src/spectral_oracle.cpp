#include "qesa/spectral_oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "qesa/errors.hpp"

namespace qesa {

namespace {

constexpr std::size_t kFirstBasisSize = 16;
constexpr std::size_t kFirstGridIntervals = 256;
constexpr std::size_t kMaxDomainPasses = 24;
constexpr double kTurningMargin = 10.0;
constexpr double kDomainPad = 1.5;
constexpr double kDomainGrowth = 1.25;
constexpr double kGoldenLogTol = 1e-5;

void require_valid(const FockConfig& cfg) {
  if (cfg.basis_size < 1) throw InvalidDimension("FockConfig: basis_size must be positive");
  if (!(cfg.omega > 0.0)) throw DomainError("FockConfig: omega must be positive");
}

void require_valid(const GridConfig& cfg) {
  if (!(cfg.x_min < cfg.x_max)) throw DomainError("GridConfig: x_min must be below x_max");
  if (cfg.points < 1) throw InvalidDimension("GridConfig: points must be positive");
}

// (X M) for tridiagonal X, exploiting the band.
Matrix tridiagonal_times(const Matrix& x, const Matrix& m) {
  const std::size_t n = x.dim();
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double s = x(i, i) * m(i, j);
      if (i > 0) s += x(i, i - 1) * m(i - 1, j);
      if (i + 1 < n) s += x(i, i + 1) * m(i + 1, j);
      out(i, j) = s;
    }
  }
  return out;
}

// Stationary points of V on one side: roots of 4 gamma x^2 + 3 beta x + 2 alpha,
// plus x = 0.
std::vector<double> stationary_points(const PotentialParams& p) {
  std::vector<double> xs{0.0};
  const double qa = 4.0 * p.gamma, qb = 3.0 * p.beta, qc = 2.0 * p.alpha;
  if (qa == 0.0) {
    if (qb != 0.0) xs.push_back(-qc / qb);
    return xs;
  }
  const double disc = qb * qb - 4.0 * qa * qc;
  if (disc >= 0.0) {
    const double s = std::sqrt(disc);
    const double q = -0.5 * (qb + std::copysign(s, qb));
    if (q != 0.0) xs.push_back(qc / q);
    xs.push_back(q / qa);
  }
  return xs;
}

// Outermost solution of V(sign * x) = level with x > 0, assuming V grows
// without bound in that direction.
double turning_point(const PotentialParams& p, double level, double sign,
                     const std::vector<double>& stationary) {
  auto v = [&](double x) { return p(sign * x); };
  double lo = 0.0;
  for (double s : stationary) lo = std::max(lo, sign * s);
  if (v(lo) >= level) return std::max(lo, 1e-3);
  double hi = std::max(1.0, 2.0 * lo);
  for (int i = 0; v(hi) < level; ++i) {
    if (i > 200) throw DomainError("grid_domain: potential is not confining");
    lo = hi;
    hi *= 2.0;
  }
  for (int i = 0; i < 200 && hi - lo > 1e-12 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (v(mid) < level ? lo : hi) = mid;
  }
  return hi;
}

double potential_minimum(const PotentialParams& p) {
  double vmin = std::numeric_limits<double>::infinity();
  for (double x : stationary_points(p)) vmin = std::min(vmin, p(x));
  return vmin;
}

OracleResult fock_converged(const PotentialParams& params, double tol, std::size_t max_basis) {
  const double omega0 =
      std::max({1.0, std::sqrt(std::abs(params.alpha)), std::pow(2.0 * params.gamma, 1.0 / 6.0)});
  OracleResult prev;
  bool have_prev = false;
  std::size_t passes = 0;
  for (std::size_t n = kFirstBasisSize; n <= max_basis; n *= 2) {
    OracleResult cur = fock_variational(params, n, 0.1 * omega0, 10.0 * omega0);
    cur.refinements = ++passes;
    if (have_prev) {
      cur.convergence_estimate = std::abs(cur.e0 - prev.e0);
      if (cur.convergence_estimate <= tol) return cur;
    } else {
      cur.convergence_estimate = std::numeric_limits<double>::infinity();
    }
    prev = cur;
    have_prev = true;
  }
  throw ConvergenceFailure("fock oracle: basis cap " + std::to_string(max_basis) +
                               " reached without convergence",
                           prev);
}

// Richardson-extrapolated ground energy on a fixed domain, doubling the
// number of intervals until successive extrapolants agree to tol.
OracleResult grid_on_domain(const PotentialParams& params, double x_min, double x_max, double tol,
                            std::size_t max_points) {
  std::vector<std::vector<double>> table;
  OracleResult best;
  best.method = OracleMethod::Grid;
  best.convergence_estimate = std::numeric_limits<double>::infinity();
  for (std::size_t intervals = kFirstGridIntervals; intervals - 1 <= max_points;
       intervals *= 2) {
    const GridConfig cfg{x_min, x_max, intervals - 1};
    std::vector<double> row{lowest_eigenvalue(grid_hamiltonian(params, cfg))};
    const std::size_t k = table.size();
    for (std::size_t j = 1; j <= k; ++j) {
      const double f = std::pow(4.0, static_cast<double>(j));
      row.push_back(row[j - 1] + (row[j - 1] - table[k - 1][j - 1]) / (f - 1.0));
    }
    table.push_back(row);
    best.grid = cfg;
    ++best.refinements;
    if (k >= 1) {
      const double change = std::abs(row.back() - table[k - 1].back());
      best.e0 = row.back();
      best.convergence_estimate = change;
      if (k >= 2 && change <= tol) return best;
    } else {
      best.e0 = row.back();
    }
  }
  throw ConvergenceFailure("grid oracle: point cap " + std::to_string(max_points) +
                               " reached without convergence",
                           best);
}

OracleResult grid_converged(const PotentialParams& params, double tol, std::size_t max_points) {
  double level = potential_minimum(params) + kTurningMargin;
  GridConfig domain = grid_domain(params, level, 0);
  OracleResult prev;
  for (std::size_t pass = 0; pass < kMaxDomainPasses; ++pass) {
    OracleResult cur = grid_on_domain(params, domain.x_min, domain.x_max, 0.5 * tol, max_points);
    if (pass > 0) {
      const double change = std::abs(cur.e0 - prev.e0);
      cur.convergence_estimate = std::max(cur.convergence_estimate, change);
      cur.refinements += prev.refinements;
      if (change <= 0.5 * tol) return cur;
    }
    prev = cur;
    // Re-derive the domain from the current estimate and keep it growing.
    const GridConfig next = grid_domain(params, cur.e0 + kTurningMargin, 0);
    domain.x_min = std::min(next.x_min, kDomainGrowth * domain.x_min);
    domain.x_max = std::max(next.x_max, kDomainGrowth * domain.x_max);
  }
  throw ConvergenceFailure("grid oracle: domain did not stabilize", prev);
}

void require_oracle_inputs(const PotentialParams& params, double tol) {
  if (!(params.gamma > 0.0)) throw DomainError("oracle: gamma must be positive");
  if (!(tol >= 1e-10)) throw DomainError("oracle: tolerance must be at least 1e-10");
}

CrossValidation cross_validate_unchecked(const PotentialParams& params, double tol) {
  CrossValidation cv;
  cv.fock = fock_converged(params, tol, kMaxBasisSize);
  cv.grid = grid_converged(params, tol, kMaxGridPoints);
  cv.difference = std::abs(cv.fock.e0 - cv.grid.e0);
  cv.agree = cv.difference <= 10.0 * tol;
  return cv;
}

}  // namespace

std::string_view to_string(OracleMethod m) { return m == OracleMethod::Fock ? "fock" : "grid"; }

Matrix position_matrix(const FockConfig& cfg) {
  require_valid(cfg);
  Matrix x(cfg.basis_size);
  for (std::size_t n = 1; n < cfg.basis_size; ++n) {
    const double v = std::sqrt(static_cast<double>(n) / (2.0 * cfg.omega));
    x(n - 1, n) = v;
    x(n, n - 1) = v;
  }
  return x;
}

Matrix momentum_sq_matrix(const FockConfig& cfg) {
  require_valid(cfg);
  const std::size_t dim = cfg.basis_size;
  const double w = cfg.omega;
  Matrix p2(dim);
  for (std::size_t n = 0; n < dim; ++n) {
    p2(n, n) = 0.5 * w * static_cast<double>(2 * n + 1);
    if (n + 2 < dim) {
      const double v = -0.5 * w * std::sqrt(static_cast<double>((n + 1) * (n + 2)));
      p2(n, n + 2) = v;
      p2(n + 2, n) = v;
    }
  }
  return p2;
}

Matrix fock_hamiltonian(const PotentialParams& params, const FockConfig& cfg) {
  require_valid(cfg);
  const std::size_t n = cfg.basis_size;
  const Matrix x = position_matrix({n + 4, cfg.omega});
  const Matrix x2 = tridiagonal_times(x, x);
  const Matrix x3 = tridiagonal_times(x, x2);
  const Matrix x4 = tridiagonal_times(x, x3);

  Matrix h = momentum_sq_matrix(cfg);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      h(i, j) += params.alpha * x2(i, j) + params.beta * x3(i, j) + params.gamma * x4(i, j);
    }
  }
  // Exact symmetrization; the band products can differ by an ulp across the diagonal.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double s = 0.5 * (h(i, j) + h(j, i));
      h(i, j) = s;
      h(j, i) = s;
    }
  }
  return h;
}

Tridiagonal grid_hamiltonian(const PotentialParams& params, const GridConfig& cfg) {
  require_valid(cfg);
  const double h = cfg.spacing();
  const double inv_h2 = 1.0 / (h * h);
  Tridiagonal t;
  t.diag.resize(cfg.points);
  t.off.assign(cfg.points - 1, -inv_h2);
  for (std::size_t i = 0; i < cfg.points; ++i) {
    const double x = cfg.x_min + h * static_cast<double>(i + 1);
    t.diag[i] = 2.0 * inv_h2 + params(x);
  }
  return t;
}

OracleResult fock_variational(const PotentialParams& params, std::size_t basis_size,
                              double omega_lo, double omega_hi) {
  if (!(omega_lo > 0.0 && omega_lo < omega_hi)) {
    throw DomainError("fock_variational: need 0 < omega_lo < omega_hi");
  }
  auto energy = [&](double log_omega) {
    return lowest_eigenvalue(fock_hamiltonian(params, {basis_size, std::exp(log_omega)}));
  };

  const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = std::log(omega_lo);
  double b = std::log(omega_hi);
  double c = b - ratio * (b - a);
  double d = a + ratio * (b - a);
  double fc = energy(c);
  double fd = energy(d);
  while (b - a > kGoldenLogTol) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - ratio * (b - a);
      fc = energy(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + ratio * (b - a);
      fd = energy(d);
    }
  }

  OracleResult r;
  r.method = OracleMethod::Fock;
  const bool left = fc <= fd;
  r.e0 = left ? fc : fd;
  r.fock = {basis_size, std::exp(left ? c : d)};
  return r;
}

GridConfig grid_domain(const PotentialParams& params, double level, std::size_t points) {
  const auto stationary = stationary_points(params);
  const double right = turning_point(params, level, 1.0, stationary);
  const double left = turning_point(params, level, -1.0, stationary);
  return {-kDomainPad * left, kDomainPad * right, points};
}

OracleResult converged_ground(const PotentialParams& params, double tol, OracleMethod method,
                              const OracleLimits& limits) {
  require_oracle_inputs(params, tol);
  return method == OracleMethod::Fock ? fock_converged(params, tol, limits.max_basis_size)
                                      : grid_converged(params, tol, limits.max_grid_points);
}

CrossValidation cross_validate(const PotentialParams& params, double tol) {
  require_oracle_inputs(params, tol);
  return cross_validate_unchecked(params, tol);
}

CrossValidation harmonic_self_test(double tol) {
  if (!(tol >= 1e-10)) throw DomainError("oracle: tolerance must be at least 1e-10");
  return cross_validate_unchecked({1.0, 0.0, 0.0}, tol);
}

}  // namespace qesa
