// End-to-end checks of the peakon-lab executable: exit codes, JSON/CSV
// outputs, and the error contracts of each subcommand.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

fs::path scratch_dir(const std::string& tag) {
  const fs::path dir = fs::temp_directory_path() / ("peakon_cli_test_" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run_cli(const std::string& args, const std::string& tag) {
  const fs::path dir = scratch_dir("io_" + tag);
  const fs::path out = dir / "stdout.txt";
  const fs::path err = dir / "stderr.txt";
  const std::string cmd = std::string(PEAKON_CLI_PATH) + " " + args + " > " + out.string() +
                          " 2> " + err.string();
  const int status = std::system(cmd.c_str());
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, slurp(out), slurp(err)};
}

void write_file(const fs::path& p, const std::string& body) {
  std::ofstream out(p);
  out << body;
}

}  // namespace

TEST_CASE("classify: worked examples as JSON") {
  RunResult r = run_cli("classify --gamma 3.5 1.0", "g1");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "{\"region\":\"A1\",\"exponent\":1.0,\"eps_used\":0.0}\n");

  r = run_cli("classify --mu 3.5 2.0", "m1");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "{\"region\":\"B5\",\"exponent\":0.5,\"eps_used\":0.0}\n");

  r = run_cli("classify --gamma 2.0 1.0", "bad");
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("requires s > 5/2") != std::string::npos);
}

TEST_CASE("classify: table mode emits the grid CSV") {
  const fs::path dir = scratch_dir("table");
  const fs::path table = dir / "grid.csv";
  const RunResult r =
      run_cli("classify --gamma 3.0 1.0 --table --out " + table.string(), "table");
  CHECK(r.exit_code == 0);
  const std::string csv = slurp(table);
  CHECK(csv.rfind("s,r_or_p,region,exponent\n", 0) == 0);
  size_t lines = 0;
  for (char ch : csv) lines += ch == '\n';
  CHECK(lines > 10000);  // 200x200 grid minus the inadmissible corner
}

TEST_CASE("solve: zero data exits 0 with zero trajectory columns") {
  const fs::path dir = scratch_dir("solve_zero");
  write_file(dir / "cfg.json",
             R"({"t_final": 0.02, "dt": 0.01, "n_points": 32,
                 "u0": {"kind": "zero"}, "v0": {"kind": "zero"}})");
  const fs::path out = dir / "run";
  const RunResult r =
      run_cli("solve --config " + (dir / "cfg.json").string() + " --out " + out.string(),
              "solve_zero");
  CHECK(r.exit_code == 0);
  CHECK(fs::exists(out / "manifest.json"));
  const std::string csv = slurp(out / "trajectory.csv");
  CHECK(csv.rfind("t,", 0) == 0);
  // every non-header row is all zeros except the leading time
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  while (std::getline(lines, line)) {
    const auto comma = line.find(',');
    CHECK(line.substr(comma) == ",0,0,0,0,0,0");
  }
  CHECK(fs::exists(out / "fields_0.csv"));
}

TEST_CASE("solve: missing config exits 1 and names the path") {
  const fs::path dir = scratch_dir("solve_missing");
  const RunResult r = run_cli(
      "solve --config " + (dir / "nope.json").string() + " --out " + (dir / "o").string(),
      "solve_missing");
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("nope.json") != std::string::npos);
}

TEST_CASE("solve: blow-up exits 2 and keeps partial outputs") {
  const fs::path dir = scratch_dir("solve_blowup");
  write_file(dir / "cfg.json",
             R"({"t_final": 5.0, "dt": 0.05, "n_points": 64, "allow_beyond_lifespan": true,
                 "u0": {"kind": "modes", "modes": [[1, 60.0, 0.0], [24, 0.0, 40.0]]},
                 "v0": {"kind": "same_as_u0"}})");
  const fs::path out = dir / "run";
  const RunResult r =
      run_cli("solve --config " + (dir / "cfg.json").string() + " --out " + out.string(),
              "solve_blowup");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("blow-up") != std::string::npos);
  CHECK(fs::exists(out / "manifest.json"));
  CHECK(fs::exists(out / "trajectory.csv"));
}

TEST_CASE("sweep: single delta exits 1") {
  const fs::path dir = scratch_dir("sweep_bad");
  write_file(dir / "cfg.json",
             R"({"n_points": 64,
                 "u0": {"kind": "modes", "modes": [[1, 0.25, 0.0]]},
                 "v0": {"kind": "modes", "modes": [[1, 0.0, 0.25]]},
                 "sweep": {"mode": "gamma", "x": 1.75, "deltas": [0.01]}})");
  const RunResult r = run_cli(
      "sweep --config " + (dir / "cfg.json").string() + " --out " + (dir / "o").string(),
      "sweep_bad");
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("need >= 3 deltas") != std::string::npos);
}

TEST_CASE("sweep: small gamma sweep passes and writes summary") {
  const fs::path dir = scratch_dir("sweep_ok");
  write_file(dir / "cfg.json",
             R"({"n_points": 64,
                 "u0": {"kind": "modes", "modes": [[1, 0.25, 0.0]]},
                 "v0": {"kind": "modes", "modes": [[1, 0.0, 0.25]]},
                 "sweep": {"mode": "gamma", "x": 1.75, "deltas": [0.001, 0.01, 0.1],
                           "record_every": 4}})");
  const fs::path out = dir / "run";
  const RunResult r =
      run_cli("sweep --config " + (dir / "cfg.json").string() + " --out " + out.string(),
              "sweep_ok");
  CHECK(r.exit_code == 0);
  const std::string csv = slurp(out / "sweep.csv");
  CHECK(csv.rfind("delta,distance,log_delta,log_distance\n", 0) == 0);
  const std::string summary = slurp(out / "summary.json");
  CHECK(summary.find("\"pass\": true") != std::string::npos);
  CHECK(fs::exists(out / "manifest.json"));
}

TEST_CASE("validate: oracle suite passes") {
  const RunResult r = run_cli("validate oracle", "val_oracle");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("validate: unknown suite exits 1") {
  const RunResult r = run_cli("validate nonsense", "val_bad");
  CHECK(r.exit_code == 1);
}

TEST_CASE("manifest determinism: same config, byte-identical outputs") {
  const fs::path dir = scratch_dir("determinism");
  write_file(dir / "cfg.json",
             R"({"t_final": 0.02, "n_points": 64,
                 "u0": {"kind": "modes", "modes": [[1, 0.2, 0.0], [2, 0.0, 0.1]]},
                 "v0": {"kind": "reflect_u0"}})");
  const fs::path out1 = dir / "run1";
  const fs::path out2 = dir / "run2";
  const RunResult r1 = run_cli(
      "solve --config " + (dir / "cfg.json").string() + " --out " + out1.string(), "det1");
  const RunResult r2 = run_cli(
      "solve --config " + (dir / "cfg.json").string() + " --out " + out2.string(), "det2");
  CHECK(r1.exit_code == 0);
  CHECK(r2.exit_code == 0);
  CHECK(slurp(out1 / "manifest.json") == slurp(out2 / "manifest.json"));
  CHECK(slurp(out1 / "trajectory.csv") == slurp(out2 / "trajectory.csv"));
  CHECK(slurp(out1 / "fields_1.csv") == slurp(out2 / "fields_1.csv"));
}
