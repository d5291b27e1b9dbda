// End-to-end checks against the installed-style binary: exit codes, stream
// formats, and the determinism contract. QPSE_BIN is injected by the build.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "qpse_cli/report.hpp"
#include "support/oracles.hpp"

namespace fs = std::filesystem;
using namespace qpse::testing;

namespace {

struct RunResult {
  int code = -1;
  std::string output;  // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(QPSE_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  for (std::size_t got; (got = std::fread(buf, 1, sizeof buf, pipe)) > 0;)
    out.append(buf, got);
  const int status = pclose(pipe);
  RunResult result;
  result.output = std::move(out);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "qpse_cli_scratch";
  fs::create_directories(dir);
  return dir;
}

fs::path write_spec(const std::string& name, const std::string& body) {
  const fs::path path = scratch_dir() / name;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << body;
  REQUIRE(out.good());
  return path;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

const char* kCoherentSpec = R"({
  "schema": 1,
  "state": {"kind": "gaussian", "center": [0.0], "sigma": [1.0], "k0": [0.0]},
  "grid": {"dim": 1, "n": 2048, "extent": 40.0}
})";

}  // namespace

TEST_CASE("verify subcommand covers every theorem and exits cleanly") {
  const auto run = run_cli("verify");
  CHECK(run.code == 0);
  CHECK(run.output.find("Theorem 1") != std::string::npos);
  CHECK(run.output.find("Theorem 6") != std::string::npos);
  CHECK(run.output.find("pass") != std::string::npos);
  CHECK(run.output.find("FAIL") == std::string::npos);
}

TEST_CASE("spin subcommand prints the curve value at default precision") {
  const auto run = run_cli("spin --theta 0.7853981634");
  CHECK(run.code == 0);
  CHECK(run.output == "4.3689013\n");
}

TEST_CASE("entropy run writes the expected report") {
  const auto spec = write_spec("coherent.json", kCoherentSpec);
  const auto out_dir = scratch_dir() / "entropy_run";
  const auto run =
      run_cli("entropy --spec " + spec.string() + " --out " + out_dir.string());
  CHECK(run.code == 0);

  const auto doc = nlohmann::json::parse(slurp(out_dir / "report.json"));
  CHECK(doc.at("schema").get<int>() == 1);
  CHECK(doc.at("subcommand").get<std::string>() == "entropy");
  CHECK(doc.at("state_kind").get<std::string>() == "gaussian");
  CHECK(std::abs(doc.at("s_total").get<double>() - kOnePlusLnPi) < 1e-9);
  CHECK(std::abs(doc.at("bbm_margin").get<double>()) < 1e-9);
}

TEST_CASE("reruns are byte-identical") {
  const auto spec = write_spec("coherent_repeat.json", kCoherentSpec);
  const auto dir_a = scratch_dir() / "repeat_a";
  const auto dir_b = scratch_dir() / "repeat_b";
  CHECK(run_cli("entropy --spec " + spec.string() + " --out " +
                dir_a.string())
            .code == 0);
  CHECK(run_cli("entropy --spec " + spec.string() + " --out " +
                dir_b.string())
            .code == 0);
  CHECK(slurp(dir_a / "report.json") == slurp(dir_b / "report.json"));
}

TEST_CASE("unknown spec key is rejected with a file:line anchor") {
  const auto spec = write_spec("bad_key.json", R"({
  "schema": 1,
  "state": {"kind": "gaussian", "sigmaa": [1.0]},
  "grid": {"dim": 1, "n": 256, "extent": 40.0}
})");
  const auto run = run_cli("entropy --spec " + spec.string());
  CHECK(run.code == 2);
  CHECK(run.output.find("sigmaa") != std::string::npos);
  CHECK(run.output.find(":3:") != std::string::npos);  // key sits on line 3
}

TEST_CASE("numerical guard failures exit with the named guard") {
  const auto spec = write_spec("clipped.json", R"({
  "schema": 1,
  "state": {"kind": "gaussian", "sigma": [1.0]},
  "grid": {"dim": 1, "n": 64, "extent": 4.0}
})");
  const auto run = run_cli("entropy --spec " + spec.string());
  CHECK(run.code == 3);
  CHECK(run.output.find("GridTooSmall") != std::string::npos);
}

TEST_CASE("usage errors exit 64") {
  CHECK(run_cli("frobnicate").code == 64);
  CHECK(run_cli("entropy").code == 64);  // --spec is required
  CHECK(run_cli("").code == 64);         // a subcommand is required
  CHECK(run_cli("--help").code == 0);
}

TEST_CASE("evolve writes the frozen CSV contract") {
  const auto spec = write_spec("evolve.json", R"({
  "schema": 1,
  "state": {"kind": "gaussian", "sigma": [1.0]},
  "grid": {"dim": 1, "n": 1024, "extent": 60.0},
  "evolution": {"potential": "free", "dt": 0.01, "steps": 100,
                "record_every": 20}
})");
  const auto out_dir = scratch_dir() / "evolve_run";
  const auto run =
      run_cli("evolve --spec " + spec.string() + " --out " + out_dir.string());
  CHECK(run.code == 0);

  const std::string csv = slurp(out_dir / "series.csv");
  std::istringstream lines(csv);
  std::string header;
  REQUIRE(std::getline(lines, header));
  CHECK(header == qpse::cli::kSeriesHeader);

  std::string row, last;
  int rows = 0;
  while (std::getline(lines, row)) {
    if (!row.empty()) {
      last = row;
      ++rows;
    }
  }
  CHECK(rows == 6);  // t = 0 plus five recordings

  // final row: t = 1, s_total from the spreading closed form
  std::istringstream cells(last);
  std::string cell;
  REQUIRE(std::getline(cells, cell, ','));
  CHECK(std::abs(std::stod(cell) - 1.0) < 1e-12);
  for (int skip = 0; skip < 2; ++skip) REQUIRE(std::getline(cells, cell, ','));
  REQUIRE(std::getline(cells, cell, ','));
  const double expected = spreading_entropy(1.0, 1.0) + kGaussKSide;
  CHECK(std::abs(std::stod(cell) - expected) < 1e-4);

  const auto doc = nlohmann::json::parse(slurp(out_dir / "report.json"));
  CHECK(doc.at("subcommand").get<std::string>() == "evolve");
  CHECK(doc.at("rows").get<int>() == 6);
  CHECK(std::abs(doc.at("t_final").get<double>() - 1.0) < 1e-12);
}

TEST_CASE("invariance run reports per-transform deltas") {
  const auto spec = write_spec("invariance.json", R"({
  "schema": 1,
  "state": {"kind": "hermite", "hermite_index": [1], "sigma": [1.0]},
  "grid": {"dim": 1, "n": 1024, "extent": 40.0},
  "transforms": [
    {"kind": "dilate", "amount": 2.0},
    {"kind": "parity"}
  ]
})");
  const auto out_dir = scratch_dir() / "invariance_run";
  const auto run = run_cli("invariance --spec " + spec.string() + " --out " +
                           out_dir.string());
  CHECK(run.code == 0);

  const auto doc = nlohmann::json::parse(slurp(out_dir / "report.json"));
  const auto& rows = doc.at("transforms");
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].at("kind").get<std::string>() == "dilate");
  CHECK(std::abs(rows[0].at("delta_s_r").get<double>() - kLn2) < 1e-9);
  CHECK(std::abs(rows[0].at("delta_s_total").get<double>()) < 1e-9);
  CHECK(rows[1].at("kind").get<std::string>() == "parity");
  CHECK(std::abs(rows[1].at("delta_s_total").get<double>()) < 1e-12);
}
