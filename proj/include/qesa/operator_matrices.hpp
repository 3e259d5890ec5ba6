#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "qesa/diff_poly.hpp"
#include "qesa/matrix.hpp"
#include "qesa/potential.hpp"

namespace qesa {

// Identities that involve x-power shifts of up to three only hold on the
// leading (N - kTruncationMargin) block of a truncated matrix.
inline constexpr std::size_t kTruncationMargin = 3;

// Operator bases, both 1-indexed:
//   x-basis position n          <-> x^n
//   derivative-basis position n <-> x^(n-1) d/dx
// so that [H, x-basis] = x-basis M1 + d-basis N1 + L1 and
//         [H, d-basis] = x-basis M2 + d-basis N2 + L2.

/// G = diag(1, 2, ..., dim). Throws InvalidDimension for dim = 0.
Matrix build_number(std::size_t dim);
/// P: ones on the first superdiagonal.
Matrix build_raise(std::size_t dim);
/// Q: ones on the first subdiagonal.
Matrix build_lower(std::size_t dim);

/// Truncated coefficient matrices of the commutator tables, with the
/// Hamiltonian occurring inside M2 and L2 replaced by the scalar `energy`.
struct CoefficientSystem {
  std::size_t dim = 0;
  Matrix m1, n1, m2, n2;
  std::vector<double> l1, l2;
  PotentialParams params;
  double energy = 0.0;
};

/// M1 = -PGPG, N1 = -2G, N2 = -GPGP,
/// M2 = -2 alpha G + 2 E PGP - 2 gamma QGQ - beta (2G - 1) Q.
CoefficientSystem build_system(const PotentialParams& params, double energy, std::size_t dim);

struct TableDeviation {
  std::string matrix;   // "M1", "N1", "L1", "M2", "N2", "L2"
  double max_abs = 0.0;
  std::size_t first_bad_column = 0;  // 1-indexed; 0 when clean
};

struct TableReport {
  std::size_t dim = 0;
  std::size_t columns_checked = 0;
  std::array<TableDeviation, 6> deviations;
  // Expansion terms that fit neither basis (D^k with k >= 2 after the H
  // substitution, or powers beyond the truncation).
  std::size_t stray_terms = 0;

  bool clean() const;
  double max_deviation() const;
  /// First deviating matrix and column as text, or empty.
  std::string first_failure() const;
};

/// Re-derives columns 1..dim-3 of every table from the normal-ordered
/// commutators [H, x^n] and [H, x^(n-1) D] and compares them to `system`.
/// D^2 terms in the expansion are rewritten as V - H, with H standing for the
/// scalar energy. Never throws on mismatch; reports it.
TableReport verify_tables(const CoefficientSystem& system);
TableReport verify_tables(const PotentialParams& params, std::size_t dim);

/// Coefficients of W = 2(aG + bGQ + cGP).
struct WAnsatz {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

Matrix build_w(const WAnsatz& w, std::size_t dim);
/// T = W + N2.
Matrix build_t(const WAnsatz& w, const CoefficientSystem& system);

struct RiccatiResidual {
  Matrix residual;          // W^2 + [W, N2] - N1 M2
  double interior_max = 0;  // over the leading (N-3) x (N-3) block
  double scale = 1;         // 1 + largest interior entry among the three terms

  bool closes(double rel_tol = 1e-10) const { return interior_max <= rel_tol * scale; }
};

RiccatiResidual riccati_residual(const WAnsatz& w, const CoefficientSystem& system);

/// Shift amounts of the harmonic oscillator H = (p^2 + x^2)/2, from the
/// coefficient matrix [[0, i], [-i, 0]] acting on the row (x, p).
struct HarmonicShifts {
  double raise = 0.0;  // +1
  double lower = 0.0;  // -1
  std::array<std::complex<double>, 2> raise_vector;
  std::array<std::complex<double>, 2> lower_vector;
  std::array<std::array<std::complex<double>, 2>, 2> coefficient_matrix;
};

HarmonicShifts harmonic_demo();

}  // namespace qesa
