#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qesa/analytic.hpp"
#include "qesa/sweep.hpp"

// Subcommands of the `qesa` tool. Each writes its report to `out`,
// diagnostics to `err`, and returns the process exit code.
namespace qesa::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailure = 1,
  kDomainError = 2,
  kConvergenceFailure = 3,
};

enum class Format { Text, Json, Csv };

struct AnalyticOptions {
  double alpha = 0.0;
  double gamma = 0.0;
  bool all_roots = false;
  Branch branch = Branch::PlusBeta;
  Format format = Format::Text;
};

struct OracleOptions {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  std::string method = "both";  // fock | grid | both
  double tol = 1e-8;
  bool harmonic = false;
  bool compare_analytic = false;
  bool json = false;
};

struct CompareOptions {
  SweepSpec sweep;
  double tol = 1e-7;
  std::string out;  // empty or "-" writes to `out`
  int threads = 0;
  bool serial = false;
  double warn_threshold = 0.05;
};

struct SurfaceOptions {
  SurfaceSpec grid;
  std::string out;
  int threads = 0;
};

struct VerifyOptions {
  std::size_t dim = 12;
  std::size_t draws = 20;
  std::uint64_t seed = 20240611;
  std::optional<std::size_t> corrupt_m2_column;  // debug: perturb M2 at (col, col)
  std::string dump_dir;
};

struct LimitOptions {
  std::vector<double> gammas;
  double alpha = 1.0;
};

int cmd_analytic(const AnalyticOptions& opts, std::ostream& out, std::ostream& err);
int cmd_oracle(const OracleOptions& opts, std::ostream& out, std::ostream& err);
int cmd_compare(const CompareOptions& opts, std::ostream& out, std::ostream& err);
int cmd_surface(const SurfaceOptions& opts, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);
int cmd_limit(const LimitOptions& opts, std::ostream& out, std::ostream& err);

/// Distinct real roots of the constraint cubic with their multiplicities.
std::vector<std::pair<double, int>> distinct_roots(double alpha, double gamma);

}  // namespace qesa::cli
