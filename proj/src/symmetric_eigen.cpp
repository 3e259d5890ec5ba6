#include "qesa/symmetric_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "qesa/errors.hpp"

namespace qesa {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

}  // namespace

double asymmetry(const Matrix& m) {
  double worst = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = i + 1; j < m.dim(); ++j) worst = std::max(worst, std::abs(m(i, j) - m(j, i)));
  return worst;
}

Tridiagonal householder_tridiagonalize(const Matrix& m) {
  const std::size_t n = m.dim();
  std::vector<double> a(m.entries().begin(), m.entries().end());
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

  Tridiagonal t;
  t.diag.resize(n);
  t.off.resize(n > 0 ? n - 1 : 0);
  std::vector<double> v(n), w(n);

  for (std::size_t k = 0; k + 2 < n; ++k) {
    // Reflect a(k+1:n, k) onto a multiple of e_(k+1).
    double norm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) norm2 += at(i, k) * at(i, k);
    const double norm = std::sqrt(norm2);
    if (norm == 0.0) {
      t.off[k] = 0.0;
      continue;
    }
    const double x0 = at(k + 1, k);
    const double alpha = x0 > 0.0 ? -norm : norm;
    for (std::size_t i = k + 1; i < n; ++i) v[i] = at(i, k);
    v[k + 1] -= alpha;
    double vnorm2 = norm2 - x0 * x0 + v[k + 1] * v[k + 1];
    if (vnorm2 == 0.0) {
      t.off[k] = x0;
      continue;
    }
    const double inv = 1.0 / std::sqrt(vnorm2);
    for (std::size_t i = k + 1; i < n; ++i) v[i] *= inv;

    // A <- A - v q^T - q v^T with q = 2 (A v - (v^T A v) v)
    double kdot = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) s += at(i, j) * v[j];
      w[i] = s;
      kdot += v[i] * s;
    }
    for (std::size_t i = k + 1; i < n; ++i) w[i] = 2.0 * (w[i] - kdot * v[i]);
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) at(i, j) -= v[i] * w[j] + w[i] * v[j];

    t.off[k] = alpha;
  }
  if (n >= 2) t.off[n - 2] = at(n - 1, n - 2);
  for (std::size_t i = 0; i < n; ++i) t.diag[i] = at(i, i);
  return t;
}

std::vector<double> tridiagonal_eigenvalues(Tridiagonal t) {
  const std::size_t n = t.size();
  std::vector<double>& d = t.diag;
  std::vector<double> e(n, 0.0);
  std::copy(t.off.begin(), t.off.end(), e.begin());

  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= kEps * dd) break;
      }
      if (m != l) {
        if (++iter > 60) throw std::runtime_error("tridiagonal_eigenvalues: QL did not converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        bool underflow = false;
        for (std::size_t i = m; i-- > l;) {
          const double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
  std::sort(d.begin(), d.end());
  return d;
}

std::size_t sturm_count(const Tridiagonal& t, double shift) {
  const std::size_t n = t.size();
  if (n == 0) return 0;
  double offmax = 0.0;
  for (double o : t.off) offmax = std::max(offmax, std::abs(o));
  const double pivmin = std::numeric_limits<double>::min() * std::max(1.0, offmax * offmax);

  std::size_t count = 0;
  double q = t.diag[0] - shift;
  for (std::size_t i = 0;; ++i) {
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
    if (i + 1 == n) break;
    q = (t.diag[i + 1] - shift) - t.off[i] * t.off[i] / q;
  }
  return count;
}

double bisect_eigenvalue(const Tridiagonal& t, std::size_t k) {
  const std::size_t n = t.size();
  if (k >= n) throw std::out_of_range("bisect_eigenvalue: index beyond matrix size");
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(t.off[i - 1]);
    if (i + 1 < n) r += std::abs(t.off[i]);
    lo = std::min(lo, t.diag[i] - r);
    hi = std::max(hi, t.diag[i] + r);
  }
  const double pad = kEps * std::max(std::abs(lo), std::abs(hi));
  lo -= pad;
  hi += pad;

  for (int iter = 0; iter < 256; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= 1e-13 * (1.0 + std::abs(mid)) || mid == lo || mid == hi) break;
    if (sturm_count(t, mid) > k) hi = mid;
    else lo = mid;
  }
  return 0.5 * (lo + hi);
}

double lowest_eigenvalue(const Matrix& m) {
  if (m.dim() == 0) throw InvalidDimension("lowest_eigenvalue: empty matrix");
  const double asym = asymmetry(m);
  if (asym > 1e-10 * (1.0 + m.max_abs())) {
    throw ContractViolation("lowest_eigenvalue: matrix is not symmetric (max |M - M^T| = " +
                            std::to_string(asym) + ")");
  }
  return tridiagonal_eigenvalues(householder_tridiagonalize(m)).front();
}

double lowest_eigenvalue(const Tridiagonal& t) {
  if (t.size() == 0) throw InvalidDimension("lowest_eigenvalue: empty matrix");
  return bisect_eigenvalue(t, 0);
}

}  // namespace qesa
