#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qesa/matrix.hpp"
#include "qesa/potential.hpp"
#include "qesa/symmetric_eigen.hpp"

namespace qesa {

// Resource caps for the convergence loops.
inline constexpr std::size_t kMaxBasisSize = 2048;
inline constexpr std::size_t kMaxGridPoints = 200000;

/// Truncated eigenbasis of -d^2/dx^2 + omega^2 x^2, whose levels are
/// (2n + 1) omega.
struct FockConfig {
  std::size_t basis_size = 8;
  double omega = 1.0;
};

/// Interior nodes of [x_min, x_max] with Dirichlet walls; spacing
/// h = (x_max - x_min) / (points + 1).
struct GridConfig {
  double x_min = -1.0;
  double x_max = 1.0;
  std::size_t points = 50;

  double spacing() const { return (x_max - x_min) / static_cast<double>(points + 1); }
};

/// Caps for converged_ground; the defaults are the library limits.
struct OracleLimits {
  std::size_t max_basis_size = kMaxBasisSize;
  std::size_t max_grid_points = kMaxGridPoints;
};

enum class OracleMethod { Fock, Grid };

std::string_view to_string(OracleMethod m);

struct OracleResult {
  double e0 = 0.0;
  OracleMethod method = OracleMethod::Fock;
  double convergence_estimate = 0.0;  // |change| at the last refinement
  FockConfig fock;                    // final basis (Fock runs)
  GridConfig grid;                    // final grid (grid runs)
  std::size_t refinements = 0;
};

/// Thrown when a refinement loop hits its resource cap; carries the best
/// estimate reached.
class ConvergenceFailure : public std::runtime_error {
 public:
  ConvergenceFailure(const std::string& what, OracleResult best)
      : std::runtime_error(what), best_(best) {}
  const OracleResult& best() const { return best_; }

 private:
  OracleResult best_;
};

/// x with entries sqrt(n / (2 omega)) on the first off-diagonals.
Matrix position_matrix(const FockConfig& cfg);
/// -d^2/dx^2 in the same basis: (2n+1) omega / 2 on the diagonal and
/// -(omega/2) sqrt((n+1)(n+2)) two off the diagonal.
Matrix momentum_sq_matrix(const FockConfig& cfg);

/// H = p^2 + alpha X^2 + beta X^3 + gamma X^4, powers taken at N + 4 and
/// truncated so the result is the leading block of the infinite matrix.
Matrix fock_hamiltonian(const PotentialParams& params, const FockConfig& cfg);

/// Second-order central differences: diagonal 2/h^2 + V(x_i), off -1/h^2.
Tridiagonal grid_hamiltonian(const PotentialParams& params, const GridConfig& cfg);

/// Lowest Fock-basis eigenvalue at fixed N, minimized over omega by
/// golden-section search on [omega_lo, omega_hi] (log scale).
OracleResult fock_variational(const PotentialParams& params, std::size_t basis_size,
                              double omega_lo, double omega_hi);

/// Domain [x_min, x_max] from the outermost turning points of V at `level`,
/// padded by 1.5x.
GridConfig grid_domain(const PotentialParams& params, double level, std::size_t points);

/// Converged ground energy with the requested method. Requires gamma > 0
/// and tol >= 1e-10 (DomainError otherwise). Throws ConvergenceFailure when
/// the basis or grid cap is reached first.
OracleResult converged_ground(const PotentialParams& params, double tol, OracleMethod method,
                              const OracleLimits& limits = {});

struct CrossValidation {
  OracleResult fock;
  OracleResult grid;
  double difference = 0.0;
  bool agree = false;  // |fock - grid| <= 10 tol
};

CrossValidation cross_validate(const PotentialParams& params, double tol);

/// Both oracles on -d^2/dx^2 + x^2 (exact ground energy 1). Bypasses the
/// gamma > 0 precondition, which exists for the analytic pairing only.
CrossValidation harmonic_self_test(double tol);

}  // namespace qesa
