#pragma once

// Independent reference computations used only by the tests. None of these
// share code paths with the library routines they check.

#include <cmath>
#include <cstddef>
#include <functional>
#include <random>
#include <vector>

#include "qesa/matrix.hpp"

namespace qesa::testing {

/// Bisection in long double on a sign change of f over [lo, hi].
inline long double bisect_root(const std::function<long double(long double)>& f, long double lo,
                               long double hi) {
  long double flo = f(lo);
  for (int i = 0; i < 200; ++i) {
    const long double mid = 0.5L * (lo + hi);
    const long double fm = f(mid);
    if (fm == 0.0L) return mid;
    if ((fm < 0.0L) == (flo < 0.0L)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5L * (lo + hi);
}

/// All real roots of t^3 - alpha t - 2 gamma by scanning for sign changes on
/// a fine grid and bisecting each bracket. Double roots are found as
/// stationary points where the cubic touches zero.
inline std::vector<long double> cubic_roots_by_scan(long double alpha, long double gamma) {
  auto f = [&](long double t) { return t * t * t - alpha * t - 2.0L * gamma; };
  const long double bound = 1.0L + std::abs(alpha) + 2.0L * std::abs(gamma);
  std::vector<long double> roots;
  const int n = 200000;
  long double prev_t = -bound, prev_f = f(prev_t);
  for (int i = 1; i <= n; ++i) {
    const long double t = -bound + 2.0L * bound * i / n;
    const long double ft = f(t);
    if (ft == 0.0L) roots.push_back(t);
    else if ((ft < 0.0L) != (prev_f < 0.0L) && prev_f != 0.0L) roots.push_back(bisect_root(f, prev_t, t));
    prev_t = t;
    prev_f = ft;
  }
  if (alpha > 0) {
    // touching roots sit at the stationary points +-sqrt(alpha/3)
    for (long double s : {std::sqrt(alpha / 3.0L), -std::sqrt(alpha / 3.0L)}) {
      if (std::abs(f(s)) < 1e-15L * (1 + std::abs(gamma))) {
        roots.push_back(s);
        roots.push_back(s);
      }
    }
  }
  return roots;
}

/// Smallest eigenvalue by steepest descent on the Rayleigh quotient, with an
/// exact line search over span{x, gradient} (2x2 Rayleigh-Ritz).
inline double rayleigh_descent_min(const Matrix& a, int iterations = 20000, unsigned seed = 7) {
  const std::size_t n = a.dim();
  std::mt19937 rng(seed);
  std::normal_distribution<double> nd;
  std::vector<double> x(n), ax(n), g(n), ag(n);
  auto matvec = [&](const std::vector<double>& v, std::vector<double>& out) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0;
      for (std::size_t j = 0; j < n; ++j) s += a(i, j) * v[j];
      out[i] = s;
    }
  };
  auto dot = [&](const std::vector<double>& u, const std::vector<double>& v) {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i) s += u[i] * v[i];
    return s;
  };
  auto normalize = [&](std::vector<double>& v) {
    const double nv = std::sqrt(dot(v, v));
    for (double& e : v) e /= nv;
  };
  for (double& e : x) e = nd(rng);
  normalize(x);
  double rq = 0;
  for (int it = 0; it < iterations; ++it) {
    matvec(x, ax);
    rq = dot(x, ax);
    for (std::size_t i = 0; i < n; ++i) g[i] = ax[i] - rq * x[i];
    const double gn = std::sqrt(dot(g, g));
    if (gn < 1e-14) break;
    for (double& e : g) e /= gn;
    matvec(g, ag);
    // Rayleigh-Ritz on the orthonormal pair (x, g)
    const double h11 = rq, h12 = dot(x, ag), h22 = dot(g, ag);
    const double mid = 0.5 * (h11 + h22);
    const double rad = std::hypot(0.5 * (h11 - h22), h12);
    const double lam = mid - rad;
    // eigenvector (h12, lam - h11) or (lam - h22, h12)
    double c1 = h12, c2 = lam - h11;
    if (std::abs(c1) + std::abs(c2) < 1e-300) {
      c1 = lam - h22;
      c2 = h12;
    }
    for (std::size_t i = 0; i < n; ++i) x[i] = c1 * x[i] + c2 * g[i];
    normalize(x);
  }
  matvec(x, ax);
  return dot(x, ax);
}

inline Matrix random_symmetric(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = u(rng);
  return m;
}

}  // namespace qesa::testing
