#include "qesa/operator_matrices.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qesa/errors.hpp"

namespace qesa {

namespace {

void require_dim(std::size_t dim, std::size_t min, const char* what) {
  if (dim < min) {
    throw InvalidDimension(std::string(what) + ": dimension " + std::to_string(dim) +
                           " is below the minimum " + std::to_string(min));
  }
}

// A column entry that is linear in (1, alpha, beta, gamma, E) with integer
// coefficients. Every table entry has a single nonzero coefficient, so
// evaluating it rounds once, exactly like the closed-form builder does.
struct Linear {
  double one = 0, alpha = 0, beta = 0, gamma = 0, energy = 0;

  double eval(const PotentialParams& p, double e) const {
    double v = 0.0;
    if (one != 0) v += one;
    if (alpha != 0) v += alpha * p.alpha;
    if (beta != 0) v += beta * p.beta;
    if (gamma != 0) v += gamma * p.gamma;
    if (energy != 0) v += energy * e;
    return v;
  }
};

// Expanded column: index 0 holds the constant (L) part, index k >= 1 the
// coefficient of basis position k.
struct SymbolicColumn {
  std::vector<Linear> x_part;
  std::vector<Linear> d_part;
  std::size_t stray = 0;
};

enum class Slot { One, Alpha, Beta, Gamma, Energy };

void accumulate(Linear& l, Slot s, double c) {
  switch (s) {
    case Slot::One: l.one += c; break;
    case Slot::Alpha: l.alpha += c; break;
    case Slot::Beta: l.beta += c; break;
    case Slot::Gamma: l.gamma += c; break;
    case Slot::Energy: l.energy += c; break;
  }
}

SymbolicColumn expand_column(const DiffPoly& p, std::size_t dim) {
  SymbolicColumn col;
  col.x_part.resize(dim + 1);
  col.d_part.resize(dim + 1);

  // [H, p] is linear in (alpha, beta, gamma): split it into its parts so each
  // coefficient stays an exact integer.
  const DiffPoly base = commute_with_H(p, {0, 0, 0});
  const std::array<std::pair<Slot, DiffPoly>, 4> parts = {{
      {Slot::One, base},
      {Slot::Alpha, commute_with_H(p, {1, 0, 0}) - base},
      {Slot::Beta, commute_with_H(p, {0, 1, 0}) - base},
      {Slot::Gamma, commute_with_H(p, {0, 0, 1}) - base},
  }};

  auto put_x = [&](unsigned xpow, Slot s, double c) {
    if (xpow <= dim) accumulate(col.x_part[xpow], s, c);
    else ++col.stray;
  };

  for (const auto& [slot, poly] : parts) {
    for (const auto& t : poly.terms()) {
      if (t.dpow == 0) {
        put_x(t.xpow, slot, t.coeff);
      } else if (t.dpow == 1) {
        // x^k D sits at derivative position k + 1
        if (t.xpow + 1 <= dim) accumulate(col.d_part[t.xpow + 1], slot, t.coeff);
        else ++col.stray;
      } else if (t.dpow == 2 && slot == Slot::One) {
        // c x^k D^2 = c x^k (V - H)
        put_x(t.xpow + 2, Slot::Alpha, t.coeff);
        put_x(t.xpow + 3, Slot::Beta, t.coeff);
        put_x(t.xpow + 4, Slot::Gamma, t.coeff);
        put_x(t.xpow, Slot::Energy, -t.coeff);
      } else {
        ++col.stray;
      }
    }
  }
  return col;
}

void compare(TableDeviation& dev, double expected, double actual, std::size_t column) {
  const double d = std::abs(expected - actual);
  if (!(d <= dev.max_abs)) dev.max_abs = std::isnan(d) ? INFINITY : d;
  if (d != 0.0 && dev.first_bad_column == 0) dev.first_bad_column = column;
}

}  // namespace

Matrix build_number(std::size_t dim) {
  require_dim(dim, 1, "build_number");
  Matrix g(dim);
  for (std::size_t i = 0; i < dim; ++i) g(i, i) = static_cast<double>(i + 1);
  return g;
}

Matrix build_raise(std::size_t dim) {
  require_dim(dim, 1, "build_raise");
  Matrix p(dim);
  for (std::size_t i = 0; i + 1 < dim; ++i) p(i, i + 1) = 1.0;
  return p;
}

Matrix build_lower(std::size_t dim) {
  require_dim(dim, 1, "build_lower");
  return build_raise(dim).transpose();
}

CoefficientSystem build_system(const PotentialParams& params, double energy, std::size_t dim) {
  require_dim(dim, 4, "build_system");
  const Matrix g = build_number(dim);
  const Matrix p = build_raise(dim);
  const Matrix q = build_lower(dim);
  const Matrix one = Matrix::identity(dim);

  CoefficientSystem s;
  s.dim = dim;
  s.params = params;
  s.energy = energy;
  s.m1 = -1.0 * (p * g * p * g);
  s.n1 = -2.0 * g;
  s.n2 = -1.0 * (g * p * g * p);
  s.m2 = (-2.0 * params.alpha) * g + (2.0 * energy) * (p * g * p) +
         (-2.0 * params.gamma) * (q * g * q) + (-params.beta) * ((2.0 * g - one) * q);
  s.l1.assign(dim, 0.0);
  s.l2.assign(dim, 0.0);
  s.l1[1] = -2.0;
  s.l2[1] = 2.0 * energy;
  return s;
}

bool TableReport::clean() const { return stray_terms == 0 && max_deviation() == 0.0; }

double TableReport::max_deviation() const {
  double m = 0.0;
  for (const auto& d : deviations) m = std::max(m, d.max_abs);
  return m;
}

std::string TableReport::first_failure() const {
  for (const auto& d : deviations) {
    if (d.max_abs != 0.0) {
      return d.matrix + " column " + std::to_string(d.first_bad_column) +
             " (max deviation " + std::to_string(d.max_abs) + ")";
    }
  }
  if (stray_terms != 0) return std::to_string(stray_terms) + " stray expansion terms";
  return {};
}

TableReport verify_tables(const CoefficientSystem& system) {
  const std::size_t dim = system.dim;
  require_dim(dim, 6, "verify_tables");

  TableReport r;
  r.dim = dim;
  r.columns_checked = dim - kTruncationMargin;
  r.deviations = {{{"M1"}, {"N1"}, {"L1"}, {"M2"}, {"N2"}, {"L2"}}};
  auto& [m1, n1, l1, m2, n2, l2] = r.deviations;
  const auto& prm = system.params;
  const double e = system.energy;

  for (std::size_t n = 1; n <= r.columns_checked; ++n) {
    const std::size_t c = n - 1;
    const auto xcol = expand_column(DiffPoly::x_power(static_cast<unsigned>(n)), dim);
    const auto dcol = expand_column(DiffPoly::monomial(1.0, static_cast<unsigned>(n - 1), 1), dim);
    r.stray_terms += xcol.stray + dcol.stray;

    compare(l1, xcol.x_part[0].eval(prm, e), system.l1[c], n);
    compare(l2, dcol.x_part[0].eval(prm, e), system.l2[c], n);
    for (std::size_t row = 1; row <= dim; ++row) {
      compare(m1, xcol.x_part[row].eval(prm, e), system.m1(row - 1, c), n);
      compare(n1, xcol.d_part[row].eval(prm, e), system.n1(row - 1, c), n);
      compare(m2, dcol.x_part[row].eval(prm, e), system.m2(row - 1, c), n);
      compare(n2, dcol.d_part[row].eval(prm, e), system.n2(row - 1, c), n);
    }
  }
  return r;
}

TableReport verify_tables(const PotentialParams& params, std::size_t dim) {
  // Any nonzero energy exercises the H entries of M2 and L2.
  return verify_tables(build_system(params, 1.25, dim));
}

Matrix build_w(const WAnsatz& w, std::size_t dim) {
  require_dim(dim, 4, "build_w");
  const Matrix g = build_number(dim);
  return 2.0 * (w.a * g + w.b * (g * build_lower(dim)) + w.c * (g * build_raise(dim)));
}

Matrix build_t(const WAnsatz& w, const CoefficientSystem& system) {
  return build_w(w, system.dim) + system.n2;
}

RiccatiResidual riccati_residual(const WAnsatz& w, const CoefficientSystem& system) {
  require_dim(system.dim, 7, "riccati_residual");
  const Matrix wm = build_w(w, system.dim);
  const Matrix w2 = wm * wm;
  const Matrix wn = commutator(wm, system.n2);
  const Matrix nm = system.n1 * system.m2;

  const std::size_t k = system.dim - kTruncationMargin;
  RiccatiResidual r;
  r.residual = w2 + wn - nm;
  r.interior_max = r.residual.max_abs(k);
  r.scale = 1.0 + std::max({w2.max_abs(k), wn.max_abs(k), nm.max_abs(k)});
  return r;
}

HarmonicShifts harmonic_demo() {
  using cd = std::complex<double>;
  const cd i{0.0, 1.0};
  HarmonicShifts h;
  h.coefficient_matrix = {{{0.0, i}, {-i, 0.0}}};

  // 2x2 Hermitian [[p, q], [conj(q), r]]: lambda = (p+r)/2 +- sqrt(((p-r)/2)^2 + |q|^2)
  const double p = h.coefficient_matrix[0][0].real();
  const double r = h.coefficient_matrix[1][1].real();
  const cd q = h.coefficient_matrix[0][1];
  const double mid = 0.5 * (p + r);
  const double rad = std::hypot(0.5 * (p - r), std::abs(q));
  h.raise = mid + rad;
  h.lower = mid - rad;

  // (q, lambda - p) spans the kernel of M - lambda when q != 0
  auto eigvec = [&](double lambda) {
    std::array<cd, 2> v{q, cd{lambda - p}};
    const double nrm = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
    v[0] /= nrm;
    v[1] /= nrm;
    return v;
  };
  h.raise_vector = eigvec(h.raise);
  h.lower_vector = eigvec(h.lower);
  return h;
}

}  // namespace qesa
