#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "qesa/errors.hpp"
#include "qesa/symmetric_eigen.hpp"

using namespace qesa;

namespace {

// -1, 2, -1 second-difference matrix: eigenvalues 2 - 2 cos(k pi / (n+1)).
Tridiagonal laplacian(std::size_t n) {
  return {std::vector<double>(n, 2.0), std::vector<double>(n - 1, -1.0)};
}

double exact_laplacian(std::size_t n, std::size_t k) {
  return 2.0 - 2.0 * std::cos(static_cast<double>(k + 1) * std::numbers::pi / static_cast<double>(n + 1));
}

}  // namespace

TEST_CASE("small cases") {
  CHECK(lowest_eigenvalue(Matrix::identity(3)) == doctest::Approx(1.0));
  Matrix m(2);
  m(0, 0) = 2;
  m(0, 1) = m(1, 0) = 1;
  m(1, 1) = 2;
  CHECK(lowest_eigenvalue(m) == doctest::Approx(1.0).epsilon(1e-15));
  const auto ev = tridiagonal_eigenvalues(householder_tridiagonalize(m));
  REQUIRE(ev.size() == 2);
  CHECK(ev[1] == doctest::Approx(3.0).epsilon(1e-15));

  const std::vector<double> d{4, -1, 2.5};
  const auto dv = tridiagonal_eigenvalues({d, {0, 0}});
  CHECK(dv == std::vector<double>{-1, 2.5, 4});
}

TEST_CASE("second-difference spectrum: QL and bisection") {
  for (std::size_t n : {5u, 40u, 300u}) {
    const auto t = laplacian(n);
    const auto ev = tridiagonal_eigenvalues(t);
    REQUIRE(ev.size() == n);
    for (std::size_t k = 0; k < n; k += std::max<std::size_t>(1, n / 7)) {
      CHECK(ev[k] == doctest::Approx(exact_laplacian(n, k)).epsilon(1e-12).scale(1));
      CHECK(bisect_eigenvalue(t, k) == doctest::Approx(exact_laplacian(n, k)).epsilon(1e-12).scale(1));
    }
    CHECK(lowest_eigenvalue(t) == doctest::Approx(exact_laplacian(n, 0)).epsilon(1e-11).scale(1e-3));
  }
}

TEST_CASE("sturm count") {
  const auto t = laplacian(10);
  CHECK(sturm_count(t, -1.0) == 0);
  CHECK(sturm_count(t, 5.0) == 10);
  CHECK(sturm_count(t, 2.0 + 1e-9) == 5);
  CHECK(sturm_count(t, exact_laplacian(10, 3) + 1e-9) == 4);
}

TEST_CASE("property: random symmetric matrices against Rayleigh descent") {
  for (unsigned seed = 1; seed <= 12; ++seed) {
    const std::size_t n = 4 + 3 * seed;
    const Matrix m = qesa::testing::random_symmetric(n, seed);
    const double ref = qesa::testing::rayleigh_descent_min(m);
    CHECK(lowest_eigenvalue(m) == doctest::Approx(ref).epsilon(1e-9).scale(1));
  }
}

TEST_CASE("property: Householder preserves trace and Frobenius norm") {
  for (unsigned seed = 40; seed < 50; ++seed) {
    const Matrix m = qesa::testing::random_symmetric(25, seed);
    const auto t = householder_tridiagonalize(m);
    double tr = 0, fro = 0, ttr = 0, tfro = 0;
    for (std::size_t i = 0; i < 25; ++i) {
      tr += m(i, i);
      for (std::size_t j = 0; j < 25; ++j) fro += m(i, j) * m(i, j);
    }
    for (double d : t.diag) {
      ttr += d;
      tfro += d * d;
    }
    for (double o : t.off) tfro += 2 * o * o;
    CHECK(ttr == doctest::Approx(tr).epsilon(1e-12).scale(1));
    CHECK(tfro == doctest::Approx(fro).epsilon(1e-12));

    const auto ev = tridiagonal_eigenvalues(t);
    CHECK(std::is_sorted(ev.begin(), ev.end()));
    double sum = 0, sq = 0;
    for (double e : ev) {
      sum += e;
      sq += e * e;
    }
    CHECK(sum == doctest::Approx(tr).epsilon(1e-11).scale(1));
    CHECK(sq == doctest::Approx(fro).epsilon(1e-11));
  }
}

TEST_CASE("property: QL and bisection agree on random tridiagonals") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    Tridiagonal t;
    const std::size_t n = 2 + static_cast<std::size_t>(trial) * 5;
    for (std::size_t i = 0; i < n; ++i) t.diag.push_back(u(rng));
    for (std::size_t i = 0; i + 1 < n; ++i) t.off.push_back(u(rng));
    const auto ev = tridiagonal_eigenvalues(t);
    for (std::size_t k = 0; k < n; ++k)
      CHECK(bisect_eigenvalue(t, k) == doctest::Approx(ev[k]).epsilon(1e-11).scale(1));
  }
}

TEST_CASE("asymmetric input is rejected") {
  Matrix m = Matrix::identity(3);
  m(0, 2) = 1e-3;
  CHECK(asymmetry(m) == 1e-3);
  CHECK_THROWS_AS(lowest_eigenvalue(m), ContractViolation);
  m(2, 0) = 1e-3;
  CHECK_NOTHROW(lowest_eigenvalue(m));
}
