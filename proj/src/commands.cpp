#include "qesa/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "qesa/errors.hpp"
#include "qesa/operator_matrices.hpp"
#include "qesa/report.hpp"
#include "qesa/spectral_oracle.hpp"

namespace qesa::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

std::string fmt(double v) { return format_number(v); }

json solution_json(const QesSolution& s, int multiplicity) {
  return {{"branch", to_string(s.branch)}, {"t", s.t},   {"beta", s.beta},
          {"a", s.a},                      {"b", s.b},   {"c", s.c},
          {"e0", s.e0},                    {"constraint_residual", s.constraint_residual},
          {"multiplicity", multiplicity}};
}

json oracle_json(const OracleResult& r) {
  json j = {{"method", to_string(r.method)},
            {"e0", r.e0},
            {"convergence_estimate", r.convergence_estimate},
            {"refinements", r.refinements}};
  if (r.method == OracleMethod::Fock) {
    j["basis_size"] = r.fock.basis_size;
    j["omega"] = r.fock.omega;
  } else {
    j["points"] = r.grid.points;
    j["x_min"] = r.grid.x_min;
    j["x_max"] = r.grid.x_max;
  }
  return j;
}

void print_oracle(std::ostream& out, const OracleResult& r) {
  out << to_string(r.method) << ": e0 = " << fmt(r.e0);
  if (r.method == OracleMethod::Fock) {
    out << "  basis_size = " << r.fock.basis_size << "  omega = " << fmt(r.fock.omega);
  } else {
    out << "  points = " << r.grid.points << "  domain = [" << fmt(r.grid.x_min) << ", "
        << fmt(r.grid.x_max) << "]";
  }
  out << "  convergence = " << fmt(r.convergence_estimate) << '\n';
}

// Writes `text` to `path`, or to `out` when the path is empty or "-".
bool emit(const std::string& path, const std::string& text, std::ostream& out, std::ostream& err) {
  if (path.empty() || path == "-") {
    out << text;
    return true;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    err << "error: cannot open " << path << " for writing\n";
    return false;
  }
  f << text;
  return static_cast<bool>(f);
}

void write_sidecar(const std::string& path, const json& meta, std::ostream& err) {
  if (path.empty() || path == "-") return;
  std::ofstream f(path + ".meta.json");
  if (!f) {
    err << "warning: cannot write " << path << ".meta.json\n";
    return;
  }
  f << meta.dump(2) << '\n';
}

std::string matrix_csv(const Matrix& m) {
  std::string s;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (j) s += ',';
      s += fmt(m(i, j));
    }
    s += '\n';
  }
  return s;
}

std::string vector_csv(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += fmt(v[i]);
  }
  return s + '\n';
}

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

std::vector<Check> ladder_checks(std::size_t n) {
  const Matrix g = build_number(n), p = build_raise(n), q = build_lower(n);
  Matrix qp_expected = Matrix::identity(n);
  qp_expected(0, 0) = 0.0;
  Matrix pq_expected = Matrix::identity(n);
  pq_expected(n - 1, n - 1) = 0.0;
  return {
      {"ladder [G,P] = -P", commutator(g, p) == -1.0 * p, ""},
      {"ladder [G,Q] = Q", commutator(g, q) == q, ""},
      {"ladder QP = diag(0,1,...,1)", q * p == qp_expected, ""},
      {"ladder PQ = 1 except (N,N)", p * q == pq_expected, ""},
  };
}

}  // namespace

std::vector<std::pair<double, int>> distinct_roots(double alpha, double gamma) {
  std::vector<std::pair<double, int>> out;
  for (double t : constraint_roots(alpha, gamma)) {
    if (!out.empty() && std::abs(out.back().first - t) <= 1e-9 * (1.0 + std::abs(t))) {
      ++out.back().second;
    } else {
      out.emplace_back(t, 1);
    }
  }
  return out;
}

int cmd_analytic(const AnalyticOptions& opts, std::ostream& out, std::ostream& err) {
  std::vector<std::pair<QesSolution, int>> sols;
  try {
    if (opts.all_roots) {
      for (auto [t, mult] : distinct_roots(opts.alpha, opts.gamma))
        sols.emplace_back(solution_from_root(t, opts.alpha, opts.gamma, opts.branch), mult);
    } else {
      const double t = cardano_principal(opts.alpha, opts.gamma);
      sols.emplace_back(solution_from_root(t, opts.alpha, opts.gamma, opts.branch), 1);
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }

  switch (opts.format) {
    case Format::Json: {
      json j = {{"alpha", opts.alpha}, {"gamma", opts.gamma}, {"solutions", json::array()}};
      for (const auto& [s, m] : sols) j["solutions"].push_back(solution_json(s, m));
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << "alpha,gamma,branch,t,beta,a,b,c,e0,constraint_residual,multiplicity\n";
      for (const auto& [s, m] : sols) {
        out << fmt(opts.alpha) << ',' << fmt(opts.gamma) << ',' << to_string(s.branch) << ','
            << fmt(s.t) << ',' << fmt(s.beta) << ',' << fmt(s.a) << ',' << fmt(s.b) << ','
            << fmt(s.c) << ',' << fmt(s.e0) << ',' << fmt(s.constraint_residual) << ',' << m << '\n';
      }
      break;
    case Format::Text:
      for (std::size_t i = 0; i < sols.size(); ++i) {
        const auto& [s, m] = sols[i];
        if (i) out << '\n';
        out << "alpha = " << fmt(opts.alpha) << "  gamma = " << fmt(opts.gamma)
            << "  branch = " << to_string(s.branch);
        if (m > 1) out << "  (root multiplicity " << m << ")";
        out << "\nt = " << fmt(s.t) << "\nbeta = " << fmt(s.beta) << "\na = " << fmt(s.a)
            << "  b = " << fmt(s.b) << "  c = " << fmt(s.c) << "\nE0 = " << fmt(s.e0)
            << "\nconstraint_residual = " << fmt(s.constraint_residual) << '\n';
      }
      break;
  }
  return kOk;
}

int cmd_oracle(const OracleOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.method != "fock" && opts.method != "grid" && opts.method != "both") {
    err << "error: --method must be fock, grid or both\n";
    return kDomainError;
  }
  json j;
  try {
    if (opts.harmonic) {
      const auto cv = harmonic_self_test(opts.tol);
      const bool pass = std::abs(cv.fock.e0 - 1.0) <= 10.0 * opts.tol &&
                        std::abs(cv.grid.e0 - 1.0) <= 10.0 * opts.tol;
      if (opts.json) {
        j = {{"self_test", "harmonic"}, {"exact", 1.0}, {"fock", oracle_json(cv.fock)},
             {"grid", oracle_json(cv.grid)}, {"pass", pass}};
        out << j.dump(2) << '\n';
      } else {
        out << "harmonic self-test: -d^2/dx^2 + x^2, exact E0 = 1\n";
        print_oracle(out, cv.fock);
        print_oracle(out, cv.grid);
        out << (pass ? "PASS" : "FAIL") << '\n';
      }
      return pass ? kOk : kVerificationFailure;
    }

    const PotentialParams params{opts.alpha, opts.beta, opts.gamma};
    std::vector<OracleResult> results;
    if (opts.method != "grid") results.push_back(converged_ground(params, opts.tol, OracleMethod::Fock));
    if (opts.method != "fock") results.push_back(converged_ground(params, opts.tol, OracleMethod::Grid));

    int code = kOk;
    j = {{"alpha", opts.alpha}, {"beta", opts.beta}, {"gamma", opts.gamma}, {"tol", opts.tol},
         {"results", json::array()}};
    for (const auto& r : results) {
      j["results"].push_back(oracle_json(r));
      if (!opts.json) print_oracle(out, r);
    }
    if (results.size() == 2) {
      const double diff = std::abs(results[0].e0 - results[1].e0);
      const bool agree = diff <= 10.0 * opts.tol;
      j["difference"] = diff;
      j["agree"] = agree;
      if (!opts.json) {
        out << "agreement: |fock - grid| = " << fmt(diff) << (agree ? " <= " : " > ")
            << fmt(10.0 * opts.tol) << (agree ? " (ok)" : " (DISAGREE)") << '\n';
      }
      if (!agree) code = kVerificationFailure;
    }
    if (opts.compare_analytic) {
      const auto sol = solution_from_root(cardano_principal(opts.alpha, opts.gamma), opts.alpha,
                                          opts.gamma, Branch::PlusBeta);
      // Either branch: the minus family has the opposite beta and the same energy.
      const double offset = std::min(std::abs(opts.beta - sol.beta), std::abs(opts.beta + sol.beta)) /
                            std::abs(sol.beta);
      json a = {{"e0", sol.e0}, {"surface_beta", sol.beta}, {"beta_relative_offset", offset}};
      if (!opts.json) {
        out << "analytic: E0 = " << fmt(sol.e0) << "  surface beta = +-" << fmt(sol.beta) << '\n';
        if (offset > 1e-9) {
          out << "note: supplied beta is off the constraint surface (relative offset "
              << fmt(offset) << ")\n";
        }
      }
      for (const auto& r : results) {
        const double delta = sol.e0 - r.e0;
        a[std::string("delta_") + std::string(to_string(r.method))] = delta;
        if (!opts.json) out << "delta_" << to_string(r.method) << " = " << fmt(delta) << '\n';
      }
      j["analytic"] = a;
    }
    if (opts.json) out << j.dump(2) << '\n';
    return code;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const ConvergenceFailure& e) {
    err << "error: " << e.what() << " (best estimate " << fmt(e.best().e0) << ", change "
        << fmt(e.best().convergence_estimate) << ")\n";
    return kConvergenceFailure;
  }
}

int cmd_compare(const CompareOptions& opts, std::ostream& out, std::ostream& err) {
  std::vector<ComparisonRecord> rows;
  const auto start = std::chrono::steady_clock::now();
  const int threads = opts.serial ? 1 : worker_count(opts.threads);
  try {
    rows = opts.serial ? compare_sweep_serial(opts.sweep, opts.tol)
                       : compare_sweep_parallel(opts.sweep, opts.tol, threads);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  int code = kOk;
  json failures = json::array();
  json warnings = json::array();
  double max_delta = 0.0;
  for (const auto& r : rows) {
    if (!r.fock_converged || !r.grid_converged) {
      failures.push_back(r.gamma);
      err << "WARNING gamma=" << fmt(r.gamma) << ": oracle did not converge\n";
      code = kConvergenceFailure;
      continue;
    }
    const double gap = std::abs(r.e0_fock - r.e0_grid);
    if (gap > 10.0 * opts.tol) {
      err << "WARNING gamma=" << fmt(r.gamma) << ": oracles disagree by " << fmt(gap) << '\n';
      warnings.push_back({{"gamma", r.gamma}, {"kind", "oracle_disagreement"}, {"value", gap}});
      if (code == kOk) code = kVerificationFailure;
    }
    const double d = std::max(std::abs(r.delta_fock), std::abs(r.delta_grid));
    max_delta = std::max(max_delta, d);
    if (d > opts.warn_threshold) {
      err << "WARNING gamma=" << fmt(r.gamma) << ": |analytic - numeric| = " << fmt(d)
          << " exceeds " << fmt(opts.warn_threshold) << '\n';
      warnings.push_back({{"gamma", r.gamma}, {"kind", "large_delta"}, {"value", d}});
    }
  }

  if (!emit(opts.out, compare_csv(rows), out, err)) return kVerificationFailure;
  const auto& s = opts.sweep;
  write_sidecar(opts.out,
                {{"command", "compare"},
                 {"alpha", s.alpha},
                 {"gamma_min", s.gamma_min},
                 {"gamma_max", s.gamma_max},
                 {"steps", s.steps},
                 {"scale", s.scale == Scale::Log ? "log" : "linear"},
                 {"tol", opts.tol},
                 {"threads", threads},
                 {"elapsed_seconds", elapsed},
                 {"max_abs_delta", max_delta},
                 {"convergence_failures", failures},
                 {"warnings", warnings}},
                err);
  return code;
}

int cmd_surface(const SurfaceOptions& opts, std::ostream& out, std::ostream& err) {
  std::vector<SurfaceRecord> rows;
  try {
    rows = surface_parallel(opts.grid, opts.threads);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  int code = kOk;
  for (const auto& r : rows) {
    if (!r.ok) {
      err << "WARNING alpha=" << fmt(r.alpha) << " gamma=" << fmt(r.gamma) << ": domain error\n";
      code = kDomainError;
    } else if (!(r.constraint_residual < 1e-9)) {
      err << "FAIL alpha=" << fmt(r.alpha) << " gamma=" << fmt(r.gamma)
          << ": constraint residual " << fmt(r.constraint_residual) << '\n';
      code = kVerificationFailure;
    }
  }
  if (!emit(opts.out, surface_csv(rows), out, err)) return kVerificationFailure;
  const auto& g = opts.grid;
  write_sidecar(opts.out,
                {{"command", "surface"},
                 {"alpha_min", g.alpha_min},
                 {"alpha_max", g.alpha_max},
                 {"alpha_steps", g.alpha_steps},
                 {"gamma_min", g.gamma_min},
                 {"gamma_max", g.gamma_max},
                 {"gamma_steps", g.gamma_steps}},
                err);
  return code;
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.dim < 8) {
    err << "error: --dim must be at least 8 (truncation margin), got " << opts.dim << '\n';
    return kDomainError;
  }
  const std::size_t n = opts.dim;
  std::vector<Check> checks = ladder_checks(n);

  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> coef(-5.0, 5.0);
  std::uniform_real_distribution<double> positive(0.01, 5.0);
  {
    Check c{"tables: closed forms reproduce [H, x^n] and [H, x^(n-1) d/dx]", true, ""};
    for (std::size_t k = 0; k < opts.draws && c.pass; ++k) {
      const PotentialParams p{coef(rng), coef(rng), positive(rng)};
      auto sys = build_system(p, coef(rng), n);
      if (k == 0 && opts.corrupt_m2_column) {
        const std::size_t col = *opts.corrupt_m2_column;
        if (col >= 1 && col <= n) sys.m2(col - 1, col - 1) += 1.0;
      }
      const auto rep = verify_tables(sys);
      if (!rep.clean()) {
        c.pass = false;
        c.detail = rep.first_failure();
      }
    }
    checks.push_back(c);
  }

  for (auto [alpha, gamma] : {std::pair{3.0, 1.0}, {1.0, 0.5}, {-2.0, 0.25}}) {
    for (Branch br : {Branch::PlusBeta, Branch::MinusBeta}) {
      const auto s = solution_from_root(cardano_principal(alpha, gamma), alpha, gamma, br);
      const auto sys = build_system(s.params(alpha, gamma), s.e0, n);
      const auto exact = riccati_residual(s.ansatz(), sys);
      WAnsatz bumped = s.ansatz();
      bumped.a += 1e-3;
      const auto off = riccati_residual(bumped, sys);
      std::ostringstream name;
      name << "riccati (alpha=" << fmt(alpha) << ", gamma=" << fmt(gamma) << ", "
           << to_string(br) << ")";
      checks.push_back({name.str(), exact.closes() && off.interior_max > 1e-4,
                        "interior residual " + fmt(exact.interior_max) + ", perturbed " +
                            fmt(off.interior_max)});
    }
  }

  {
    const auto h = harmonic_demo();
    const auto& m = h.coefficient_matrix;
    double worst = 0.0;
    for (int i = 0; i < 2; ++i) {
      const auto mu = m[i][0] * h.raise_vector[0] + m[i][1] * h.raise_vector[1];
      worst = std::max(worst, std::abs(mu - h.raise * h.raise_vector[i]));
    }
    checks.push_back({"harmonic coefficient matrix shifts (+1, -1)",
                      h.raise == 1.0 && h.lower == -1.0 && worst < 1e-15, ""});
  }

  const Check* first_fail = nullptr;
  for (const auto& c : checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << '\n';
    if (!c.pass && !first_fail) first_fail = &c;
  }

  if (!opts.dump_dir.empty()) {
    std::error_code ec;
    fs::create_directories(opts.dump_dir, ec);
    const auto s = solution_from_root(cardano_principal(3.0, 1.0), 3.0, 1.0, Branch::PlusBeta);
    const auto sys = build_system(s.params(3.0, 1.0), s.e0, n);
    const fs::path dir(opts.dump_dir);
    const std::pair<const char*, std::string> files[] = {
        {"m1.csv", matrix_csv(sys.m1)},
        {"n1.csv", matrix_csv(sys.n1)},
        {"m2.csv", matrix_csv(sys.m2)},
        {"n2.csv", matrix_csv(sys.n2)},
        {"l1.csv", vector_csv(sys.l1)},
        {"l2.csv", vector_csv(sys.l2)},
        {"w.csv", matrix_csv(build_w(s.ansatz(), n))},
        {"t.csv", matrix_csv(build_t(s.ansatz(), sys))},
        {"riccati.csv", matrix_csv(riccati_residual(s.ansatz(), sys).residual)},
    };
    for (const auto& [name, text] : files) {
      if (!emit((dir / name).string(), text, out, err)) return kVerificationFailure;
    }
  }

  if (first_fail) {
    out << "FAIL: " << first_fail->name;
    if (!first_fail->detail.empty()) out << ": " << first_fail->detail;
    out << '\n';
    return kVerificationFailure;
  }
  out << "PASS\n";
  return kOk;
}

int cmd_limit(const LimitOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.gammas.empty()) {
    err << "error: --gamma-list is empty\n";
    return kDomainError;
  }
  struct Row {
    double gamma, e0, asym, gap;
  };
  std::vector<Row> rows;
  try {
    for (double g : opts.gammas) {
      const double e0 = ground_energy(opts.alpha, g);
      const double asym = asymptotic_energy(g);
      rows.push_back({g, e0, asym, std::abs(e0 - asym) / std::abs(asym)});
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }

  out << "gamma,e0,asymptotic,relative_gap\n";
  for (const auto& r : rows)
    out << fmt(r.gamma) << ',' << fmt(r.e0) << ',' << fmt(r.asym) << ',' << fmt(r.gap) << '\n';

  auto sorted = rows;
  std::stable_sort(sorted.begin(), sorted.end(), [](const Row& a, const Row& b) { return a.gamma < b.gamma; });
  bool monotone = true;
  for (std::size_t i = 1; i < sorted.size(); ++i) monotone = monotone && sorted[i].gap <= sorted[i - 1].gap;
  out << "# gaps non-increasing in gamma: " << (monotone ? "yes" : "no") << '\n';
  return monotone ? kOk : kVerificationFailure;
}

}  // namespace qesa::cli
