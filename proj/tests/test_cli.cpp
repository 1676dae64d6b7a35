// End-to-end tests of the disc-harmonics binary (path injected by the build).
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  static int counter = 0;
  const std::string out_path = "/tmp/discharm_cli_" + std::to_string(counter++) + ".out";
  const std::string cmd =
      env_prefix + " " + DISCHARM_CLI_PATH + " " + args + " > " + out_path + " 2>&1";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_path);
  std::remove(out_path.c_str());
  return r;
}

bool json_numbers_roundtrip(const nlohmann::json& j) {
  if (j.is_number_float()) {
    const double x = j.get<double>();
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return std::strtod(buf, nullptr) == x;
  }
  if (j.is_object() || j.is_array()) {
    for (const auto& item : j)
      if (!json_numbers_roundtrip(item)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("extend: json output and 17-digit round-trip") {
  const RunResult r = run_cli("extend --preset harmonic_1 --at 0.5,0 --at 0.25,1.0 --format json");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["rows"].size() == 2);
  CHECK(j["rows"][0]["re"].get<double>() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(j["rows"][1]["re"].get<double>() == doctest::Approx(0.25 * std::cos(1.0)).epsilon(1e-14));
  CHECK(json_numbers_roundtrip(j));

  // Idempotence: parse -> dump -> parse preserves every value.
  const auto j2 = nlohmann::json::parse(j.dump());
  CHECK(j == j2);
}

TEST_CASE("extend: oracle columns") {
  const RunResult r =
      run_cli("extend --preset abs_t --N 255 --at 0.7,2.0 --oracle --format json");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  const auto& row = j["rows"][0];
  CHECK(std::abs(row["re"].get<double>() - row["oracle_re"].get<double>()) <= 1e-10);
  CHECK(row.contains("oracle_err"));
}

TEST_CASE("extend: spec file input") {
  const std::string spec_path = "/tmp/discharm_cli_spec.json";
  {
    std::ofstream f(spec_path);
    f << R"({"kind":"coefficients","N":1,"coefficients":[[1, 1.0, 0.0]]})";
  }
  const RunResult r = run_cli("extend --spec " + spec_path + " --at 0.5,0 --format json");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["rows"][0]["re"].get<double>() == doctest::Approx(0.5).epsilon(1e-15));
  std::remove(spec_path.c_str());
}

TEST_CASE("derive: identity residual column") {
  const RunResult r = run_cli(
      "derive --preset abs_t --N 511 --at 0.5,0.7 --which dz --identity --format json");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["rows"][0]["identity_residual"].get<double>() <= 1e-12);
  CHECK(j["rows"][0]["which"] == "dz");
}

TEST_CASE("csv headers are stable") {
  CHECK(run_cli("extend --preset cos_1 --at 0.5,0 --format csv").out.rfind("r,theta,re,im\n", 0) ==
        0);
  CHECK(run_cli("derive --preset cos_1 --at 0.5,0 --format csv")
            .out.rfind("r,theta,which,re,im\n", 0) == 0);
  CHECK(run_cli("norms --preset cos_1 --space circle --p 2 --format csv")
            .out.rfind("space,p,of,value,method,error_bound,panels,flags\n", 0) == 0);
  CHECK(run_cli("verify identity --trials 2 --format csv")
            .out.rfind("check,seed,observed,bound,margin,pass,runtime_ms,params\n", 0) == 0);
}

TEST_CASE("norms: circle p=2 of cos is 1/sqrt(2)") {
  const RunResult r = run_cli("norms --preset cos_1 --space circle --p 2 --format json");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["rows"][0]["value"].get<double>() ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("norms: p=inf is flagged as a lower bound") {
  const RunResult r = run_cli("norms --preset cos_1 --space circle --p inf --format json");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["rows"][0]["flags"].get<std::string>().find("lower-bound") != std::string::npos);
}

TEST_CASE("verify: canonical output is byte-identical across runs and threads") {
  const std::string args = "verify all --trials 4 --format json --canonical";
  const RunResult a = run_cli(args, "DISC_HARMONICS_THREADS=1");
  const RunResult b = run_cli(args, "DISC_HARMONICS_THREADS=3");
  const RunResult c = run_cli(args);
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  CHECK(a.out.find("\"runtime_ms\":0") != std::string::npos);
}

TEST_CASE("verify: seed flag changes reports") {
  const RunResult a = run_cli("verify riesz --p 3 --trials 6 --seed 1 --format json --canonical");
  const RunResult b = run_cli("verify riesz --p 3 --trials 6 --seed 2 --format json --canonical");
  CHECK(a.out != b.out);
}

TEST_CASE("exit codes") {
  CHECK(run_cli("extend --preset cos_1 --at 0.5,0").exit_code == 0);
  CHECK(run_cli("verify jensen --constant-scale 0.5").exit_code == 1);   // real violation
  CHECK(run_cli("extend --preset nope --at 0.5,0").exit_code == 2);      // usage
  CHECK(run_cli("bogus-subcommand").exit_code == 2);                     // usage
  CHECK(run_cli("verify nope").exit_code == 2);                          // unknown check
  CHECK(run_cli("extend --preset cos_1 --at 1.5,0").exit_code == 3);     // outside the disc
  CHECK(run_cli("norms --preset cos_1 --space circle --p 0.5").exit_code == 3);  // p < 1
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("verify: unknown check lists the available names") {
  const RunResult r = run_cli("verify nope");
  CHECK(r.out.find("available") != std::string::npos);
  CHECK(r.out.find("riesz") != std::string::npos);
}

TEST_CASE("example: emits the four tables") {
  const RunResult r = run_cli("example --N 1023 --emit csv");
  REQUIRE(r.exit_code == 0);
  for (const char* name : {"izfz_coefficients", "theta_grid", "r_grid", "growth"}) {
    CHECK(r.out.find(std::string("# table: ") + name) != std::string::npos);
  }
}

TEST_CASE("output goes to a file with --output") {
  const std::string path = "/tmp/discharm_cli_file.json";
  const RunResult r = run_cli("extend --preset cos_1 --at 0.5,0 --format json --output " + path);
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.empty());
  const auto j = nlohmann::json::parse(slurp(path));
  CHECK(j["rows"].size() == 1);
  std::remove(path.c_str());
}
