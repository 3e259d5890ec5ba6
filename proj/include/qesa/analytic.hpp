#pragma once

#include <string_view>
#include <vector>

#include "qesa/operator_matrices.hpp"

namespace qesa {

/// Sign family of the ansatz coefficients. PlusBeta pairs with the
/// constraint beta^2/(4 gamma) - 4 gamma^(3/2)/beta = alpha, MinusBeta with
/// the "+" form of the same constraint.
enum class Branch { PlusBeta, MinusBeta };

std::string_view to_string(Branch b);

struct QesSolution {
  double t = 0.0;  // beta / (2 sqrt(gamma)) up to the branch sign
  double beta = 0.0;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double e0 = 0.0;
  double constraint_residual = 0.0;
  Branch branch = Branch::PlusBeta;

  WAnsatz ansatz() const { return {a, b, c}; }
  PotentialParams params(double alpha, double gamma) const { return {alpha, beta, gamma}; }
};

/// Real roots of t^3 - alpha t - 2 gamma = 0, ascending, repeated according
/// to multiplicity. Throws DomainError for gamma <= 0.
std::vector<double> constraint_roots(double alpha, double gamma);

/// Largest real root of the constraint cubic via Cardano's radicals, or the
/// trigonometric form when gamma^2 < (alpha/3)^3.
double cardano_principal(double alpha, double gamma);

/// Ansatz coefficients and ground energy on a root of the constraint cubic.
/// Throws DomainError for t = 0 or gamma <= 0.
QesSolution solution_from_root(double t, double alpha, double gamma, Branch branch);

/// E0(alpha, gamma) on the principal root, PlusBeta branch.
double ground_energy(double alpha, double gamma);

/// PlusBeta:  beta^2/(4 gamma) - 4 gamma^(3/2)/beta - alpha
/// MinusBeta: beta^2/(4 gamma) + 4 gamma^(3/2)/beta - alpha
double constraint_residual(double beta, double alpha, double gamma, Branch branch);

/// Same, divided by the sum of magnitudes of its three terms.
double relative_constraint_residual(double beta, double alpha, double gamma, Branch branch);

/// Large-gamma law -3/2 (2 gamma)^(1/3).
double asymptotic_energy(double gamma);

/// Residuals of the five consistency conditions
///   a^2 + 2bc = alpha, ab = beta/2, b^2 = gamma, ac + b = 0, c^2 + a + E = 0.
struct ConsistencyResiduals {
  double quadratic = 0.0;
  double cubic = 0.0;
  double quartic = 0.0;
  double raise = 0.0;
  double energy = 0.0;

  double max_abs() const;
};

ConsistencyResiduals consistency(const QesSolution& s, double alpha, double gamma);

}  // namespace qesa
