// Exercises the installed command-line surface end to end: exit codes
// (0 success, 1 check failure, 2 usage error, 3 I/O error), output shapes,
// and file round trips. The binary path comes in via XXRING_CLI_PATH.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "xxring/io.hpp"

namespace {

namespace fs = std::filesystem;

struct CliResult {
  int exit_code;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path out_path =
      fs::temp_directory_path() / ("xxring_cli_out_" + std::to_string(++counter) + ".txt");
  const std::string command =
      std::string(XXRING_CLI_PATH) + " " + args + " > " + out_path.string() + " 2>&1";
  const int status = std::system(command.c_str());
  CliResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_path);
  std::stringstream ss;
  ss << in.rdbuf();
  result.output = ss.str();
  fs::remove(out_path);
  return result;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("spectrum prints labeled energies sorted ascending") {
  const CliResult r = run_cli("spectrum --J -1 --B 1");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("W4   -2.5") != std::string::npos);
  CHECK(r.output.find("000") != std::string::npos);
  // W4 is the ground level here, so it must come first.
  CHECK(r.output.find("W4") < r.output.find("111"));
}

TEST_CASE("point reports closed-form quantities") {
  const CliResult r = run_cli("point --J 1 --B 0 --T 0.5 --q concurrence");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("concurrence = 0\n") != std::string::npos);

  const CliResult adv = run_cli("point --J -1 --B 0 --T 1 --q avg_fidelity,advantage");
  CHECK(adv.exit_code == 0);
  CHECK(adv.output.find("advantage = 1") != std::string::npos);

  const CliResult frozen = run_cli("point --J -1 --B 1 --T 0.02 --q concurrence");
  CHECK(frozen.exit_code == 0);
  CHECK(frozen.output.find("concurrence = 0.66666") != std::string::npos);
}

TEST_CASE("point dispatches T = 0 to the exact limits") {
  const CliResult r = run_cli("point --J -1 --B 1 --T 0 --q concurrence,avg_fidelity --verify");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("concurrence") != std::string::npos);
  CHECK(r.output.find("0.6666666") != std::string::npos);
  CHECK(r.output.find("0.7777777") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("point --J 1 --B 0 --T -1 --q concurrence").exit_code == 2);
  CHECK(run_cli("point --J 1 --B 0 --T 1 --q bogus").exit_code == 2);
  CHECK(run_cli("point --J 1 --B 0").exit_code == 2);          // missing --T
  CHECK(run_cli("spectrum --J abc --B 0").exit_code == 2);     // non-numeric
  CHECK(run_cli("frobnicate").exit_code == 2);                 // unknown subcommand
  CHECK(run_cli("critical --J 0 --B 1").exit_code == 2);       // undefined at J = 0
  CHECK(run_cli("sweep --J -1 --B 0:4:5 --T 1:0.5:3 --q concurrence").exit_code == 2);
}

TEST_CASE("critical solves both transitions on the ferromagnetic side") {
  const CliResult r = run_cli("critical --J -1 --eta 1");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("T1 = 1.27959") != std::string::npos);
  CHECK(r.output.find("T2 = 0.965516") != std::string::npos);

  const CliResult no_adv = run_cli("critical --J 1 --eta 0");
  CHECK(no_adv.exit_code == 0);
  CHECK(no_adv.output.find("no transition") != std::string::npos);
}

TEST_CASE("sweep writes parseable csv and json") {
  const fs::path dir = fs::temp_directory_path();
  const fs::path csv_path = dir / "xxring_sweep_test.csv";
  const fs::path json_path = dir / "xxring_sweep_test.json";

  const std::string base = "sweep --J -1 --B 0:2:3 --T 0.2:1:4 --q concurrence,avg_fidelity";
  CHECK(run_cli(base + " --out " + csv_path.string()).exit_code == 0);
  CHECK(run_cli(base + " --format json --out " + json_path.string()).exit_code == 0);

  std::ifstream csv_in(csv_path);
  const xxring::SweepTable csv = xxring::read_csv(csv_in);
  CHECK(csv.rows.size() == 12);
  CHECK(csv.columns.size() == 5);

  std::ifstream json_in(json_path);
  const xxring::SweepTable json = xxring::read_json(json_in);
  REQUIRE(json.rows.size() == csv.rows.size());
  for (std::size_t r = 0; r < csv.rows.size(); ++r) {
    for (std::size_t c = 0; c < csv.rows[r].size(); ++c) {
      CHECK(json.rows[r][c] == csv.rows[r][c]);
    }
  }
  fs::remove(csv_path);
  fs::remove(json_path);
}

TEST_CASE("sweep data rows are byte-identical across reruns") {
  const fs::path a = fs::temp_directory_path() / "xxring_rerun_a.csv";
  const fs::path b = fs::temp_directory_path() / "xxring_rerun_b.csv";
  const std::string base =
      "sweep --J -1 --B 0:4:9 --T 0.1:2:5 --q concurrence,avg_fidelity,advantage --out ";
  REQUIRE(run_cli(base + a.string()).exit_code == 0);
  REQUIRE(run_cli(base + b.string()).exit_code == 0);

  auto data_rows = [](const fs::path& p) {
    std::ifstream in(p);
    std::string line, all;
    while (std::getline(in, line)) {
      if (!line.empty() && line.front() != '#') all += line + "\n";
    }
    return all;
  };
  CHECK(data_rows(a) == data_rows(b));
  fs::remove(a);
  fs::remove(b);
}

TEST_CASE("unwritable output path exits with code 3") {
  CHECK(run_cli("sweep --J -1 --B 0:1:2 --T 0.5:1:2 --q concurrence "
                "--out /nonexistent_dir_xxring/out.csv")
            .exit_code == 3);
}

TEST_CASE("verify passes clean and fails under fault injection") {
  const auto t0 = std::chrono::steady_clock::now();
  const CliResult clean = run_cli("verify --grid small");
  const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0);
  CHECK(clean.exit_code == 0);
  CHECK(clean.output.find("VERIFY PASS") != std::string::npos);
  CHECK(elapsed.count() < 1.0);

  const CliResult broken = run_cli("verify --grid small --perturb 1e-6");
  CHECK(broken.exit_code == 1);
  CHECK(broken.output.find("VERIFY FAIL") != std::string::npos);
}

TEST_CASE("tables exits nonzero when the comparison tolerance is exceeded") {
  CHECK(run_cli("tables").exit_code == 0);
  // The solved roots sit a few 1e-6 from the six-digit references, so an
  // absurdly strict tolerance must flip every row to FAIL.
  const CliResult strict = run_cli("tables --tol 1e-9");
  CHECK(strict.exit_code == 1);
  CHECK(strict.output.find("TABLES FAIL") != std::string::npos);
}

}  // TEST_SUITE
