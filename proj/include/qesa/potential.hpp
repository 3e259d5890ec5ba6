#pragma once

namespace qesa {

// V(x) = alpha x^2 + beta x^3 + gamma x^4 in units hbar = 1, 2m = 1, so the
// Hamiltonian is -d^2/dx^2 + V(x).
struct PotentialParams {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;

  double operator()(double x) const {
    const double x2 = x * x;
    return x2 * (alpha + x * (beta + x * gamma));
  }

  friend bool operator==(const PotentialParams&, const PotentialParams&) = default;
};

}  // namespace qesa
