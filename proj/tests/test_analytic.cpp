#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "qesa/analytic.hpp"
#include "qesa/errors.hpp"

using namespace qesa;
using qesa::testing::cubic_roots_by_scan;

TEST_CASE("exact point alpha=3, gamma=1") {
  const auto plus = solution_from_root(cardano_principal(3, 1), 3, 1, Branch::PlusBeta);
  CHECK(plus.beta == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(plus.a == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(plus.b == 1.0);
  CHECK(plus.c == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(plus.e0 == doctest::Approx(-2.25).epsilon(1e-15));

  const auto minus = solution_from_root(cardano_principal(3, 1), 3, 1, Branch::MinusBeta);
  CHECK(minus.beta == doctest::Approx(-4.0).epsilon(1e-15));
  CHECK(minus.a == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(minus.b == -1.0);
  CHECK(minus.c == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(minus.e0 == doctest::Approx(-2.25).epsilon(1e-15));
}

TEST_CASE("double root at alpha=3, gamma=1") {
  const auto r = constraint_roots(3, 1);
  REQUIRE(r.size() == 3);
  CHECK(r[0] == -1.0);
  CHECK(r[1] == -1.0);
  CHECK(r[2] == 2.0);
}

TEST_CASE("plastic number at alpha=1, gamma=0.5") {
  // t^3 - t - 1 bisected independently
  const auto t_ref = static_cast<double>(
      qesa::testing::bisect_root([](long double t) { return t * t * t - t - 1; }, 1, 2));
  const double t = cardano_principal(1, 0.5);
  CHECK(t == doctest::Approx(t_ref).epsilon(1e-14));
  CHECK(t == doctest::Approx(1.3247179572).epsilon(1e-10));
  CHECK(ground_energy(1, 0.5) == doctest::Approx(-0.5 / (t_ref * t_ref) - t_ref).epsilon(1e-14));
  CHECK(std::abs(ground_energy(1, 0.5) - (-1.6096380)) < 1e-6);
}

TEST_CASE("casus irreducibilis: alpha=3, gamma=0.1") {
  const auto roots = constraint_roots(3, 0.1);
  REQUIRE(roots.size() == 3);
  const auto ref = cubic_roots_by_scan(3, 0.1);
  REQUIRE(ref.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(roots[i] == doctest::Approx(double(ref[i])).epsilon(1e-12));
  CHECK(cardano_principal(3, 0.1) == doctest::Approx(1.7645).epsilon(1e-4));
  CHECK(cardano_principal(3, 0.1) == roots.back());
}

TEST_CASE("alpha=0 reduces to the pure cube-root law") {
  for (double g : {0.1, 0.5, 2.0, 8.0}) {
    CAPTURE(g);
    const double s = std::cbrt(2 * g);
    const auto sol = solution_from_root(cardano_principal(0, g), 0, g, Branch::PlusBeta);
    CHECK(sol.beta == doctest::Approx(2 * std::sqrt(g) * s).epsilon(1e-12));
    CHECK(sol.e0 == doctest::Approx(-1.5 * s).epsilon(1e-12));
    CHECK(sol.e0 == doctest::Approx(asymptotic_energy(g)).epsilon(1e-12));
  }
}

TEST_CASE("property: roots agree with an independent scan") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> ua(-6, 6), ug(0.01, 5);
  for (int trial = 0; trial < 60; ++trial) {
    const double alpha = ua(rng), gamma = ug(rng);
    CAPTURE(alpha);
    CAPTURE(gamma);
    const auto lib = constraint_roots(alpha, gamma);
    const auto ref = cubic_roots_by_scan(alpha, gamma);
    REQUIRE(lib.size() == ref.size());
    for (std::size_t i = 0; i < lib.size(); ++i)
      CHECK(lib[i] == doctest::Approx(double(ref[i])).epsilon(1e-11).scale(1));
  }
}

TEST_CASE("property: every root solves the five consistency conditions") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> ua(-5, 5), ug(0.01, 5);
  for (int trial = 0; trial < 100; ++trial) {
    const double alpha = ua(rng), gamma = ug(rng);
    for (double t : constraint_roots(alpha, gamma)) {
      for (Branch br : {Branch::PlusBeta, Branch::MinusBeta}) {
        const auto s = solution_from_root(t, alpha, gamma, br);
        const double scale = 1 + std::abs(alpha) + gamma + s.a * s.a + s.c * s.c + std::abs(s.e0);
        CHECK(consistency(s, alpha, gamma).max_abs() <= 1e-12 * scale);
        CHECK(relative_constraint_residual(s.beta, alpha, gamma, br) < 1e-12);
      }
    }
  }
}

TEST_CASE("property: branch symmetry") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> ua(-5, 5), ug(0.01, 5);
  for (int trial = 0; trial < 100; ++trial) {
    const double alpha = ua(rng), gamma = ug(rng);
    const double t = cardano_principal(alpha, gamma);
    const auto p = solution_from_root(t, alpha, gamma, Branch::PlusBeta);
    const auto m = solution_from_root(t, alpha, gamma, Branch::MinusBeta);
    CHECK(p.e0 == m.e0);
    CHECK(p.beta == -m.beta);
    CHECK(p.a == m.a);
    CHECK(p.b == -m.b);
    CHECK(p.c == -m.c);
  }
}

TEST_CASE("property: principal root is the largest and positive") {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> ua(-5, 5), ug(0.01, 5);
  for (int trial = 0; trial < 100; ++trial) {
    const double alpha = ua(rng), gamma = ug(rng);
    const auto roots = constraint_roots(alpha, gamma);
    CHECK(cardano_principal(alpha, gamma) == doctest::Approx(roots.back()).epsilon(1e-13));
    CHECK(roots.back() > 0);
  }
}

TEST_CASE("asymptotic approach") {
  double prev = 1.0;
  for (double g : {1e2, 1e4, 1e6}) {
    const double gap = std::abs(ground_energy(1, g) - asymptotic_energy(g)) / std::abs(asymptotic_energy(g));
    CHECK(gap < prev);
    prev = gap;
  }
  CHECK(prev < 0.01);
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(constraint_roots(1, 0), DomainError);
  CHECK_THROWS_AS(cardano_principal(1, -1), DomainError);
  CHECK_THROWS_AS(solution_from_root(0.0, 1, 1, Branch::PlusBeta), DomainError);
  CHECK_THROWS_AS(constraint_residual(0.0, 1, 1, Branch::PlusBeta), DomainError);
  CHECK_THROWS_AS(asymptotic_energy(0), DomainError);
  CHECK_THROWS_AS(ground_energy(1, std::nan("")), DomainError);
  CHECK(to_string(Branch::PlusBeta) == "plus");
  CHECK(to_string(Branch::MinusBeta) == "minus");
}
