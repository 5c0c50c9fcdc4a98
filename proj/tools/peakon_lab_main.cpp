// peakon-lab: pseudo-spectral laboratory for the two-component cubic peakon
// system and its FORQ / nonlocal-FORQ reductions.
//
//   peakon-lab solve    --config cfg.json --out DIR
//   peakon-lab classify --gamma S R | --mu S P [--eps PARAM] [--table] [--out FILE]
//   peakon-lab sweep    --config cfg.json --out DIR
//   peakon-lab validate SUITE   (oracle|conservation|pt|peakon|mollifier|all)
//
// Exit codes: 0 success, 1 usage/config error, 2 blow-up, 3 validation failure.

#include <cstdio>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "peakon/io.hpp"
#include "peakon/validate.hpp"

namespace {

using namespace peakon;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitBlowup = 2;
constexpr int kExitValidation = 3;

int cmd_solve(const std::string& config_path, const std::string& out_dir) {
  const RunSpec spec = parse_config(config_path);
  write_manifest(out_dir, make_manifest("solve", spec));

  const PeriodicGrid grid(spec.solve.n_points);
  const Field u0 = spec.u0.build(grid, std::nullopt);
  const Field v0 = spec.v0.build(grid, u0);
  const Trajectory traj = solve(u0, v0, spec.solve);

  write_trajectory_csv(out_dir, traj);
  write_field_snapshots(out_dir, traj);
  if (traj.blew_up) {
    std::cerr << "blow-up detected at t = " << format_double(traj.blowup_time)
              << "; partial outputs retained in " << out_dir << "\n";
    return kExitBlowup;
  }
  std::cout << "wrote " << traj.times.size() << " records to " << out_dir << "\n";
  return kExitOk;
}

int cmd_sweep(const std::string& config_path, const std::string& out_dir) {
  const RunSpec spec = parse_config(config_path);
  if (!spec.sweep) {
    throw std::invalid_argument("config: sweep command needs a \"sweep\" section");
  }
  int positive = 0;
  for (double d : spec.sweep->deltas) {
    if (d > 0.0) ++positive;
  }
  if (positive < 3) {
    throw std::invalid_argument("config: need >= 3 deltas for fit");
  }
  write_manifest(out_dir, make_manifest("sweep", spec));

  const PeriodicGrid grid(spec.solve.n_points);
  const Field u0 = spec.u0.build(grid, std::nullopt);
  const Field v0 = spec.v0.build(grid, u0);
  const SweepResult res = holder_sweep(u0, v0, *spec.sweep);

  write_sweep_csv(std::filesystem::path(out_dir), res);
  const double slope_floor = 0.8 * res.predicted_exponent;
  std::ofstream summary(std::filesystem::path(out_dir) / "summary.json");
  summary << sweep_summary(res, slope_floor).dump(2) << "\n";
  if (res.aborted) {
    std::cerr << "blow-up aborted the sweep after " << res.completed_legs
              << " legs; partial sweep.csv retained\n";
    return kExitBlowup;
  }
  std::cout << "fitted slope " << format_double(res.fitted_slope) << " vs predicted exponent "
            << format_double(res.predicted_exponent) << " (" << res.region_id << ")\n";
  return kExitOk;
}

int cmd_classify(bool gamma_mode, double s, double x, double eps_param, bool table,
                 const std::string& out_path) {
  if (table) {
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
      file.open(out_path);
      if (!file) throw std::invalid_argument("cannot open table output \"" + out_path + "\"");
      os = &file;
    }
    *os << "s,r_or_p,region,exponent\n";
    const int cells = 200;
    const double s_lo = 2.51, s_hi = 4.0;
    const double x_lo = -1.0, x_hi = 3.99;
    for (int i = 0; i < cells; ++i) {
      const double si = s_lo + (s_hi - s_lo) * i / (cells - 1);
      for (int j = 0; j < cells; ++j) {
        const double xj = x_lo + (x_hi - x_lo) * j / (cells - 1);
        const bool admissible = gamma_mode ? xj < si : xj < si - 1.0;
        if (!admissible) continue;
        const RegionResult r =
            gamma_mode ? classify_gamma(si, xj, eps_param) : classify_mu(si, xj, eps_param);
        *os << format_double(si) << ',' << format_double(xj) << ',' << r.region_id << ','
            << format_double(r.exponent) << '\n';
      }
    }
    return kExitOk;
  }
  const RegionResult r = gamma_mode ? classify_gamma(s, x, eps_param) : classify_mu(s, x, eps_param);
  nlohmann::ordered_json j;
  j["region"] = r.region_id;
  j["exponent"] = r.exponent;
  j["eps_used"] = r.eps_used;
  std::cout << j.dump() << "\n";
  return kExitOk;
}

int cmd_validate(const std::string& suite) {
  std::vector<SuiteResult> results;
  if (suite == "all") {
    results = run_all_suites();
  } else {
    results.push_back(run_suite(suite));
  }
  bool ok = true;
  for (const SuiteResult& sr : results) {
    std::printf("suite %s\n", sr.suite.c_str());
    for (const CheckRow& row : sr.rows) {
      std::printf("  [%s] %-60s measured=%.6g tol=%.6g %s\n", row.pass ? "PASS" : "FAIL",
                  row.name.c_str(), row.measured, row.tolerance, row.note.c_str());
    }
    ok = ok && sr.all_passed();
  }
  std::printf("%s\n", ok ? "ALL SUITES PASSED" : "VALIDATION FAILURES PRESENT");
  return ok ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pseudo-spectral laboratory for the two-component cubic peakon system"};
  app.require_subcommand(1);

  std::string config_path, out_dir, suite = "all", table_out;
  std::vector<double> gamma_args, mu_args;
  double eps_param = -1.0;
  bool table = false;

  CLI::App* solve_cmd = app.add_subcommand("solve", "integrate the system, write CSV outputs");
  solve_cmd->add_option("--config", config_path, "JSON config path")->required();
  solve_cmd->add_option("--out", out_dir, "output directory")->required();

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "Hölder-exponent region of (s,r) or (s,p)");
  auto* gopt = classify_cmd->add_option("--gamma", gamma_args, "s r (solution-map exponent)")
                   ->expected(2);
  auto* mopt = classify_cmd->add_option("--mu", mu_args, "s p (time-derivative exponent)")
                   ->expected(2);
  gopt->excludes(mopt);
  classify_cmd->add_option("--eps", eps_param, "eps0/eps1 parameter (default: interior value)");
  classify_cmd->add_flag("--table", table, "emit the full region grid as CSV");
  classify_cmd->add_option("--out", table_out, "write the --table CSV here instead of stdout");

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Hölder-slope sweep against the predicted exponent");
  sweep_cmd->add_option("--config", config_path, "JSON config path")->required();
  sweep_cmd->add_option("--out", out_dir, "output directory")->required();

  CLI::App* validate_cmd = app.add_subcommand("validate", "run an invariant suite");
  validate_cmd->add_option("name", suite, "oracle|conservation|pt|peakon|mollifier|all");
  validate_cmd->add_option("--suite", suite, "suite name (same as the positional)")
      ->excludes("name");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(config_path, out_dir);
    if (sweep_cmd->parsed()) return cmd_sweep(config_path, out_dir);
    if (classify_cmd->parsed()) {
      if (gamma_args.empty() && mu_args.empty() && !table) {
        std::cerr << "classify: pass --gamma S R or --mu S P\n";
        return kExitConfig;
      }
      const bool gamma_mode = !gamma_args.empty() || mu_args.empty();
      const auto& args = gamma_mode ? gamma_args : mu_args;
      const double s = args.size() == 2 ? args[0] : 3.0;
      const double x = args.size() == 2 ? args[1] : 0.0;
      if (table && args.empty()) {
        return cmd_classify(gamma_mode, 0, 0, eps_param, true, table_out);
      }
      return cmd_classify(gamma_mode, s, x, eps_param, table, table_out);
    }
    if (validate_cmd->parsed()) return cmd_validate(suite);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}
