#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <limits>

#include "qesa/analytic.hpp"
#include "qesa/errors.hpp"
#include "qesa/report.hpp"
#include "qesa/sweep.hpp"

using namespace qesa;

TEST_CASE("gamma samples") {
  const auto lin = gamma_samples({1.0, 0.5, 5.0, 10, Scale::Linear});
  REQUIRE(lin.size() == 10);
  CHECK(lin.front() == 0.5);
  CHECK(lin.back() == 5.0);
  CHECK(lin[1] == doctest::Approx(1.0));

  const auto lg = gamma_samples({1.0, 0.01, 100.0, 5, Scale::Log});
  CHECK(lg.front() == 0.01);
  CHECK(lg.back() == 100.0);
  CHECK(lg[2] == doctest::Approx(1.0));
  CHECK(std::is_sorted(lg.begin(), lg.end()));

  CHECK_THROWS_AS(gamma_samples({1.0, 0.0, 1.0, 4}), DomainError);
  CHECK_THROWS_AS(gamma_samples({1.0, 2.0, 1.0, 4}), DomainError);
  CHECK_THROWS_AS(gamma_samples({1.0, 1.0, 2.0, 1}), DomainError);
}

TEST_CASE("compare point") {
  const auto r = compare_point(1.0, 0.5, 1e-7);
  CHECK(r.fock_converged);
  CHECK(r.grid_converged);
  CHECK(r.beta == doctest::Approx(2 * std::sqrt(0.5) * cardano_principal(1, 0.5)));
  CHECK(r.e0_analytic == ground_energy(1, 0.5));
  CHECK(std::abs(r.e0_fock - r.e0_grid) < 1e-6);
  CHECK(r.delta_fock == r.e0_analytic - r.e0_fock);
  // the closed form sits a little below the numerical ground energy here
  CHECK(r.delta_fock < 0);
  CHECK(std::abs(r.delta_fock) < 0.05);
}

TEST_CASE("serial and parallel sweeps agree bit for bit") {
  const SweepSpec spec{-2.0, 0.25, 5.0, 6, Scale::Linear};
  const auto a = compare_sweep_serial(spec, 1e-6);
  const auto b = compare_sweep_parallel(spec, 1e-6, 3);
  CHECK(compare_csv(a) == compare_csv(b));
  CHECK(a.size() == 6);
  CHECK_THROWS_AS(compare_sweep_serial(spec, 1e-12), DomainError);
  CHECK_THROWS_AS(compare_sweep_parallel(spec, 0.0), DomainError);
}

TEST_CASE("surface") {
  const SurfaceSpec spec{-5, 5, 20, 0.25, 5, 20};
  const auto s = surface_serial(spec);
  const auto p = surface_parallel(spec, 4);
  REQUIRE(s.size() == 400);
  CHECK(surface_csv(s) == surface_csv(p));
  CHECK(s.front().alpha == -5);
  CHECK(s.front().gamma == 0.25);
  CHECK(s.back().alpha == 5);
  CHECK(s.back().gamma == 5);
  for (const auto& r : s) {
    CHECK(r.ok);
    CHECK(r.constraint_residual < 1e-9);
  }
  CHECK_THROWS_AS(surface_serial({0, 1, 2, 0, 1, 2}), DomainError);
  CHECK_THROWS_AS(surface_serial({1, 0, 2, 0.1, 1, 2}), DomainError);
}

TEST_CASE("worker count honors QESA_THREADS") {
  ::setenv("QESA_THREADS", "2", 1);
  CHECK(worker_count(8) == 2);
  CHECK(worker_count(1) == 1);
  CHECK(worker_count(0) <= 2);
  ::setenv("QESA_THREADS", "junk", 1);
  CHECK(worker_count(8) == 8);
  ::unsetenv("QESA_THREADS");
  CHECK(worker_count(5) == 5);
  CHECK(worker_count(0) >= 1);
}

TEST_CASE("number formatting") {
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(-2.25) == "-2.25");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(1e-20) == "1e-20");
  CHECK(format_number(std::numeric_limits<double>::quiet_NaN()) == "nan");
  CHECK(format_number(-std::numeric_limits<double>::infinity()) == "-inf");
}

TEST_CASE("csv layout") {
  ComparisonRecord r{1, 0.5, 2, -1.5, -1.4, -1.4, -0.1, -0.1, true, true};
  const auto csv = compare_csv(std::vector{r});
  CHECK(csv == std::string(kCompareHeader) + "\n1,0.5,2,-1.5,-1.4,-1.4,-0.1,-0.1\n");
  CHECK(surface_csv(std::vector<SurfaceRecord>{}) == std::string(kSurfaceHeader) + "\n");
}
