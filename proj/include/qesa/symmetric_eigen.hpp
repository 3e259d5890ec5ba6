#pragma once

#include <cstddef>
#include <vector>

#include "qesa/matrix.hpp"

namespace qesa {

/// Symmetric tridiagonal matrix: diag has n entries, off has n - 1.
struct Tridiagonal {
  std::vector<double> diag;
  std::vector<double> off;

  std::size_t size() const { return diag.size(); }
};

/// Householder reduction of a symmetric matrix to tridiagonal form
/// (eigenvalues only, no accumulated transformation).
Tridiagonal householder_tridiagonalize(const Matrix& m);

/// All eigenvalues of a symmetric tridiagonal matrix by implicit-shift QL,
/// ascending. Iterates until each off-diagonal falls below
/// 1e-13 * norm of the matrix.
std::vector<double> tridiagonal_eigenvalues(Tridiagonal t);

/// Number of eigenvalues strictly below `shift` (Sturm count via the LDL^T
/// pivots of T - shift).
std::size_t sturm_count(const Tridiagonal& t, double shift);

/// k-th smallest eigenvalue (0-based) by Sturm bisection; the bracket is
/// narrowed to 1e-13 * (1 + |lambda|).
double bisect_eigenvalue(const Tridiagonal& t, std::size_t k);

/// Smallest eigenvalue. The dense overload checks symmetry (1e-10 scaled)
/// and throws ContractViolation otherwise; it runs Householder + QL. The
/// tridiagonal overload runs Sturm bisection.
double lowest_eigenvalue(const Matrix& m);
double lowest_eigenvalue(const Tridiagonal& t);

/// max |m_ij - m_ji|
double asymmetry(const Matrix& m);

}  // namespace qesa
