#include "qesa/diff_poly.hpp"

#include <algorithm>

namespace qesa {

namespace {

// n! / (n-k)!
double falling(unsigned n, unsigned k) {
  double r = 1.0;
  for (unsigned i = 0; i < k; ++i) r *= static_cast<double>(n - i);
  return r;
}

double binomial(unsigned n, unsigned k) {
  double r = 1.0;
  for (unsigned i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / i;
  return r;
}

}  // namespace

DiffPoly DiffPoly::constant(double c) { return monomial(c, 0, 0); }

DiffPoly DiffPoly::monomial(double coeff, unsigned xpow, unsigned dpow) {
  DiffPoly p;
  p.add({xpow, dpow}, coeff);
  return p;
}

DiffPoly DiffPoly::hamiltonian(const PotentialParams& params) {
  DiffPoly h = monomial(-1.0, 0, 2);
  h += monomial(params.alpha, 2, 0);
  h += monomial(params.beta, 3, 0);
  h += monomial(params.gamma, 4, 0);
  return h;
}

void DiffPoly::add(Monomial m, double c) {
  if (c == 0.0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0.0) terms_.erase(it);
  }
}

std::vector<DiffPoly::Term> DiffPoly::terms() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) out.push_back({c, m.xpow, m.dpow});
  return out;
}

double DiffPoly::coeff(unsigned xpow, unsigned dpow) const {
  auto it = terms_.find({xpow, dpow});
  return it == terms_.end() ? 0.0 : it->second;
}

unsigned DiffPoly::max_dpow() const {
  unsigned m = 0;
  for (const auto& [mono, c] : terms_) m = std::max(m, mono.dpow);
  return m;
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add(m, c);
  return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add(m, -c);
  return *this;
}

DiffPoly& DiffPoly::operator*=(double s) {
  if (s == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= s;
    it = it->second == 0.0 ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

// (x^a D^b)(x^c D^d) = x^a (sum_k C(b,k) c!/(c-k)! x^(c-k) D^(b-k)) D^d
DiffPoly operator*(const DiffPoly& lhs, const DiffPoly& rhs) {
  DiffPoly out;
  for (const auto& [l, lc] : lhs.terms_) {
    for (const auto& [r, rc] : rhs.terms_) {
      const unsigned kmax = std::min(l.dpow, r.xpow);
      for (unsigned k = 0; k <= kmax; ++k) {
        const double c = lc * rc * binomial(l.dpow, k) * falling(r.xpow, k);
        out.add({l.xpow + r.xpow - k, l.dpow - k + r.dpow}, c);
      }
    }
  }
  return out;
}

DiffPoly commutator(const DiffPoly& a, const DiffPoly& b) { return a * b - b * a; }

DiffPoly commute_with_H(const DiffPoly& p, const PotentialParams& params) {
  return commutator(DiffPoly::hamiltonian(params), p);
}

}  // namespace qesa
