#include "qesa/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "qesa/errors.hpp"

namespace qesa {

namespace {

void require_positive_gamma(double gamma, const char* what) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw DomainError(std::string(what) + ": gamma must be positive and finite, got " +
                      std::to_string(gamma));
  }
}

double cubic(double t, double alpha, double gamma) { return t * (t * t - alpha) - 2.0 * gamma; }

// Newton steps on t^3 - alpha t - 2 gamma, accepted only while they shrink
// the residual. Stops at double roots where the slope vanishes.
double polish(double t, double alpha, double gamma) {
  double f = cubic(t, alpha, gamma);
  for (int iter = 0; iter < 4 && f != 0.0; ++iter) {
    const double slope = 3.0 * t * t - alpha;
    if (slope == 0.0) break;
    const double next = t - f / slope;
    const double fn = cubic(next, alpha, gamma);
    if (!(std::abs(fn) < std::abs(f))) break;
    t = next;
    f = fn;
  }
  return t;
}

// Sign of gamma^2 - (alpha/3)^3, with near-zero values snapped to zero so that
// double roots are reported as such.
int discriminant_sign(double alpha, double gamma) {
  const double p = alpha / 3.0;
  const double p3 = p * p * p;
  const double d = gamma * gamma - p3;
  const double scale = gamma * gamma + std::abs(p3);
  if (std::abs(d) <= 64.0 * std::numeric_limits<double>::epsilon() * scale) return 0;
  return d > 0.0 ? 1 : -1;
}

}  // namespace

std::string_view to_string(Branch b) { return b == Branch::PlusBeta ? "plus" : "minus"; }

std::vector<double> constraint_roots(double alpha, double gamma) {
  require_positive_gamma(gamma, "constraint_roots");
  const int sign = discriminant_sign(alpha, gamma);
  if (sign > 0) return {cardano_principal(alpha, gamma)};
  if (sign == 0) {
    // (t - 2s)(t + s)^2 with s^3 = gamma and 3 s^2 = alpha
    const double s = std::cbrt(gamma);
    return {-s, -s, 2.0 * s};
  }
  const double r = 2.0 * std::sqrt(alpha / 3.0);
  const double theta = std::acos(std::clamp(gamma / std::pow(alpha / 3.0, 1.5), -1.0, 1.0));
  std::vector<double> roots;
  for (int k = 0; k < 3; ++k) {
    const double t = r * std::cos((theta - 2.0 * std::numbers::pi * k) / 3.0);
    roots.push_back(polish(t, alpha, gamma));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

double cardano_principal(double alpha, double gamma) {
  require_positive_gamma(gamma, "cardano_principal");
  const double p = alpha / 3.0;
  double t = 0.0;
  if (discriminant_sign(alpha, gamma) >= 0) {
    const double d = std::cbrt(gamma + std::sqrt(std::max(0.0, gamma * gamma - p * p * p)));
    t = p / d + d;
  } else {
    // casus irreducibilis: all three roots real, k = 0 is the largest
    const double theta = std::acos(std::clamp(gamma / std::pow(p, 1.5), -1.0, 1.0));
    t = 2.0 * std::sqrt(p) * std::cos(theta / 3.0);
  }
  return polish(t, alpha, gamma);
}

QesSolution solution_from_root(double t, double alpha, double gamma, Branch branch) {
  require_positive_gamma(gamma, "solution_from_root");
  if (t == 0.0 || !std::isfinite(t)) {
    throw DomainError("solution_from_root: degenerate root t = 0 (beta would vanish)");
  }
  const double sg = std::sqrt(gamma);
  QesSolution s;
  s.t = t;
  s.branch = branch;
  if (branch == Branch::PlusBeta) {
    s.beta = 2.0 * sg * t;
    s.a = s.beta / (2.0 * sg);
    s.b = sg;
    s.c = -2.0 * gamma / s.beta;
    s.e0 = -4.0 * gamma * gamma / (s.beta * s.beta) - s.beta / (2.0 * sg);
  } else {
    s.beta = -2.0 * sg * t;
    s.a = -s.beta / (2.0 * sg);
    s.b = -sg;
    s.c = -2.0 * gamma / s.beta;
    s.e0 = -4.0 * gamma * gamma / (s.beta * s.beta) + s.beta / (2.0 * sg);
  }
  s.constraint_residual = constraint_residual(s.beta, alpha, gamma, branch);
  return s;
}

double ground_energy(double alpha, double gamma) {
  return solution_from_root(cardano_principal(alpha, gamma), alpha, gamma, Branch::PlusBeta).e0;
}

double constraint_residual(double beta, double alpha, double gamma, Branch branch) {
  require_positive_gamma(gamma, "constraint_residual");
  if (beta == 0.0) throw DomainError("constraint_residual: beta must be nonzero");
  const double quad = beta * beta / (4.0 * gamma);
  const double inv = 4.0 * std::pow(gamma, 1.5) / beta;
  return branch == Branch::PlusBeta ? quad - inv - alpha : quad + inv - alpha;
}

double relative_constraint_residual(double beta, double alpha, double gamma, Branch branch) {
  const double r = constraint_residual(beta, alpha, gamma, branch);
  const double scale =
      beta * beta / (4.0 * gamma) + std::abs(4.0 * std::pow(gamma, 1.5) / beta) + std::abs(alpha);
  return std::abs(r) / scale;
}

double asymptotic_energy(double gamma) {
  require_positive_gamma(gamma, "asymptotic_energy");
  return -1.5 * std::cbrt(2.0 * gamma);
}

double ConsistencyResiduals::max_abs() const {
  return std::max({std::abs(quadratic), std::abs(cubic), std::abs(quartic), std::abs(raise),
                   std::abs(energy)});
}

ConsistencyResiduals consistency(const QesSolution& s, double alpha, double gamma) {
  ConsistencyResiduals r;
  r.quadratic = s.a * s.a + 2.0 * s.b * s.c - alpha;
  r.cubic = s.a * s.b - 0.5 * s.beta;
  r.quartic = s.b * s.b - gamma;
  r.raise = s.a * s.c + s.b;
  r.energy = s.c * s.c + s.a + s.e0;
  return r;
}

}  // namespace qesa
