#pragma once

#include <compare>
#include <map>
#include <vector>

#include "qesa/potential.hpp"

namespace qesa {

/// Polynomial in x and D = d/dx, kept in normal order: every monomial is
/// coeff * x^xpow * D^dpow with all x factors to the left. Products are
/// normal-ordered with D x = x D + 1 (in closed form via Leibniz).
class DiffPoly {
 public:
  struct Monomial {
    unsigned xpow = 0;
    unsigned dpow = 0;
    auto operator<=>(const Monomial&) const = default;
  };

  struct Term {
    double coeff = 0.0;
    unsigned xpow = 0;
    unsigned dpow = 0;
    friend bool operator==(const Term&, const Term&) = default;
  };

  DiffPoly() = default;

  static DiffPoly constant(double c);
  static DiffPoly monomial(double coeff, unsigned xpow, unsigned dpow);
  static DiffPoly x_power(unsigned n) { return monomial(1.0, n, 0); }
  /// -D^2 + V(x)
  static DiffPoly hamiltonian(const PotentialParams& params);

  /// Terms ordered by (xpow, dpow); zero coefficients never appear.
  std::vector<Term> terms() const;
  double coeff(unsigned xpow, unsigned dpow) const;
  bool is_zero() const { return terms_.empty(); }
  unsigned max_dpow() const;

  DiffPoly& operator+=(const DiffPoly& rhs);
  DiffPoly& operator-=(const DiffPoly& rhs);
  DiffPoly& operator*=(double s);

  friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
  friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }
  friend DiffPoly operator*(DiffPoly a, double s) { return a *= s; }
  friend DiffPoly operator*(double s, DiffPoly a) { return a *= s; }
  friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);

  friend bool operator==(const DiffPoly&, const DiffPoly&) = default;

 private:
  void add(Monomial m, double c);

  std::map<Monomial, double> terms_;
};

DiffPoly commutator(const DiffPoly& a, const DiffPoly& b);

/// [H, p] for H = -D^2 + alpha x^2 + beta x^3 + gamma x^4.
DiffPoly commute_with_H(const DiffPoly& p, const PotentialParams& params);

}  // namespace qesa
