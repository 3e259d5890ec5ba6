// qesa: closed-form ground energies and numerical cross-checks for
// H = -d^2/dx^2 + alpha x^2 + beta x^3 + gamma x^4.

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "qesa/commands.hpp"

int main(int argc, char** argv) {
  using namespace qesa;
  using namespace qesa::cli;

  CLI::App app{"qesa - cubic-quartic oscillator ground energies and their numerical checks"};
  app.require_subcommand(1);

  // analytic
  AnalyticOptions an;
  std::string an_branch = "plus";
  bool an_json = false, an_csv = false;
  auto* analytic = app.add_subcommand("analytic", "closed-form beta and E0 for (alpha, gamma)");
  analytic->add_option("--alpha", an.alpha, "x^2 coefficient")->required();
  analytic->add_option("--gamma", an.gamma, "x^4 coefficient (> 0)")->required();
  analytic->add_flag("--all-roots", an.all_roots, "one record per real root of the constraint cubic");
  analytic->add_option("--branch", an_branch, "plus | minus")->check(CLI::IsMember({"plus", "minus"}));
  auto* an_json_opt = analytic->add_flag("--json", an_json, "JSON output");
  analytic->add_flag("--csv", an_csv, "CSV output")->excludes(an_json_opt);

  // oracle
  OracleOptions orc;
  auto* oracle = app.add_subcommand("oracle", "numerical ground energy (Fock basis and/or grid)");
  oracle->add_option("--alpha", orc.alpha);
  oracle->add_option("--beta", orc.beta);
  oracle->add_option("--gamma", orc.gamma, "must be > 0 (use --harmonic for the gamma = 0 self-test)");
  oracle->add_option("--method", orc.method, "fock | grid | both")->check(CLI::IsMember({"fock", "grid", "both"}));
  oracle->add_option("--tol", orc.tol, "convergence tolerance (>= 1e-10)");
  oracle->add_flag("--harmonic", orc.harmonic, "self-test on -d^2/dx^2 + x^2 (exact E0 = 1)");
  oracle->add_flag("--compare-analytic", orc.compare_analytic, "report analytic E0 and deltas");
  oracle->add_flag("--json", orc.json, "JSON output");

  // compare
  CompareOptions cmp;
  std::string cmp_scale = "linear";
  auto* compare = app.add_subcommand("compare", "analytic vs numerical E0 over a gamma sweep (CSV)");
  compare->add_option("--alpha", cmp.sweep.alpha)->required();
  compare->add_option("--gamma-min", cmp.sweep.gamma_min)->required();
  compare->add_option("--gamma-max", cmp.sweep.gamma_max)->required();
  compare->add_option("--steps", cmp.sweep.steps)->required();
  compare->add_option("--scale", cmp_scale, "linear | log")->check(CLI::IsMember({"linear", "log"}));
  compare->add_option("--tol", cmp.tol, "oracle tolerance");
  compare->add_option("--out", cmp.out, "CSV path (default: stdout)");
  compare->add_option("--threads", cmp.threads, "worker threads (capped by QESA_THREADS)");
  compare->add_flag("--serial", cmp.serial, "use the serial reference kernel");
  compare->add_option("--warn-threshold", cmp.warn_threshold, "|analytic - numeric| above this prints a WARNING")
      ->check(CLI::NonNegativeNumber);

  // surface
  SurfaceOptions srf;
  auto* surface = app.add_subcommand("surface", "beta(alpha, gamma) grid (CSV)");
  surface->add_option("--alpha-min", srf.grid.alpha_min)->required();
  surface->add_option("--alpha-max", srf.grid.alpha_max)->required();
  surface->add_option("--alpha-steps", srf.grid.alpha_steps)->required();
  surface->add_option("--gamma-min", srf.grid.gamma_min)->required();
  surface->add_option("--gamma-max", srf.grid.gamma_max)->required();
  surface->add_option("--gamma-steps", srf.grid.gamma_steps)->required();
  surface->add_option("--out", srf.out, "CSV path (default: stdout)");
  surface->add_option("--threads", srf.threads);

  // verify
  VerifyOptions ver;
  std::size_t corrupt_col = 0;
  auto* verify = app.add_subcommand("verify", "operator-algebra identity suite");
  verify->add_option("--dim", ver.dim, "truncation dimension (>= 8)");
  verify->add_option("--seed", ver.seed, "seed for the random parameter draws");
  verify->add_option("--draws", ver.draws, "random parameter draws for the table check");
  verify->add_option("--dump", ver.dump_dir, "write matrix CSVs for (alpha, gamma) = (3, 1) here");
  auto* corrupt = verify->add_option("--corrupt-m2", corrupt_col, "debug: perturb M2 at this column");

  // limit
  LimitOptions lim;
  auto* limit = app.add_subcommand("limit", "large-gamma asymptotics of E0");
  limit->add_option("--gamma-list", lim.gammas, "comma-separated gammas")->required()->delimiter(',');
  limit->add_option("--alpha", lim.alpha, "x^2 coefficient (default 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help exits 0; malformed invocations share the domain-error code.
    return app.exit(e) == 0 ? kOk : kDomainError;
  }

  if (analytic->parsed()) {
    an.branch = an_branch == "minus" ? Branch::MinusBeta : Branch::PlusBeta;
    an.format = an_json ? Format::Json : an_csv ? Format::Csv : Format::Text;
    return cmd_analytic(an, std::cout, std::cerr);
  }
  if (oracle->parsed()) return cmd_oracle(orc, std::cout, std::cerr);
  if (compare->parsed()) {
    cmp.sweep.scale = cmp_scale == "log" ? Scale::Log : Scale::Linear;
    return cmd_compare(cmp, std::cout, std::cerr);
  }
  if (surface->parsed()) return cmd_surface(srf, std::cout, std::cerr);
  if (verify->parsed()) {
    if (corrupt->count() > 0) ver.corrupt_m2_column = corrupt_col;
    return cmd_verify(ver, std::cout, std::cerr);
  }
  if (limit->parsed()) return cmd_limit(lim, std::cout, std::cerr);
  return kDomainError;
}
