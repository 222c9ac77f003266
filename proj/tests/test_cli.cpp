#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "helpers.hpp"
#include "sombor/moments.hpp"
#include "sombor/oracle.hpp"

using nlohmann::json;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  std::ostringstream text;
  text << file.rdbuf();
  return text.str();
}

CliResult run_cli(const std::string& args) {
  static int counter = 0;
  const std::string out_path = "cli_stdout_" + std::to_string(counter) + ".txt";
  const std::string err_path = "cli_stderr_" + std::to_string(counter) + ".txt";
  ++counter;
  const std::string command =
      std::string("\"") + SOMBORCHAIN_CLI_PATH + "\" " + args + " > " + out_path + " 2> " +
      err_path;
  const int status = std::system(command.c_str());
  CliResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return result;
}

}  // namespace

TEST_CASE("compute prints the exact value of an explicit chain") {
  const CliResult r =
      run_cli("compute --l 6 --n 1 --seq \"\" --variant plain --format json");
  REQUIRE(r.exit_code == 0);
  const json payload = json::parse(r.out);
  CHECK(payload["schema_version"] == 1);
  CHECK(payload["command"] == "compute");
  CHECK(payload["value"].get<double>() == doctest::Approx(16.97056275).epsilon(1e-8));
  CHECK(payload["census"]["m22"] == 6);
  CHECK(payload["census"]["m23"] == 0);
  CHECK(payload["census"]["m33"] == 0);

  const CliResult penta = run_cli("compute --l 5 --n 3 --seq 1 --variant plain --format json");
  REQUIRE(penta.exit_code == 0);
  CHECK(json::parse(penta.out)["value"].get<double>() ==
        doctest::Approx(25.0 * std::sqrt(2.0) + 6.0 * std::sqrt(13.0)).epsilon(1e-12));

  const CliResult preset =
      run_cli("compute --preset polyphenyl --n 2 --seq \"\" --variant plain --format json");
  REQUIRE(preset.exit_code == 0);
  CHECK(json::parse(preset.out)["value"].get<double>() ==
        doctest::Approx(41.29226279).epsilon(1e-8));
}

TEST_CASE("JSON payloads round-trip numeric fields bit-exactly") {
  const CliResult r = run_cli(
      "moments --l 6 --n 4 --p 0.333333333333,0.333333333333,0.333333333334 --variant plain "
      "--format json");
  REQUIRE(r.exit_code == 0);
  const json payload = json::parse(r.out);

  const sombor::ChainSpec spec{
      6, 4, {0.333333333333, 0.333333333333, 0.333333333334}, sombor::SomborVariant::plain()};
  const double mean = sombor::expected_value(spec).mean;
  const double var = sombor::variance(spec).variance;
  CHECK(testutil::bits_equal(payload["mean"].get<double>(), mean));
  CHECK(testutil::bits_equal(payload["variance"].get<double>(), var));
  CHECK(payload["mean"].get<double>() == doctest::Approx(89.8423).epsilon(1e-5));

  // Re-serializing the parsed payload must preserve every numeric field.
  const json reparsed = json::parse(payload.dump());
  CHECK(testutil::bits_equal(reparsed["mean"].get<double>(), mean));
  CHECK(testutil::bits_equal(reparsed["variance"].get<double>(), var));
}

TEST_CASE("moments CSV carries the documented columns") {
  const CliResult r = run_cli("moments --l 4 --n 2 --p 0.5,0.5 --format csv");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("l,n,p1,p2,variant,mean,variance,A,B,C,M,N,P,Q") == 0);

  const CliResult avr = run_cli("moments --l 4 --n 2 --p 0.5,0.5 --variant average --format csv");
  REQUIRE(avr.exit_code == 0);
  CHECK(avr.out.find("l,n,p1,p2,variant,mean,variance,A,B,C,note") == 0);
  CHECK(avr.out.find("M,N,P,Q") == std::string::npos);
}

TEST_CASE("cyclooctane contract run is pinned") {
  const CliResult r = run_cli(
      "moments --preset cyclooctane --n 100 --p 0.25,0.25,0.25,0.25 --variant reduced "
      "--format json");
  REQUIRE(r.exit_code == 0);
  const json payload = json::parse(r.out);
  // Values frozen at first implementation.
  CHECK(payload["mean"].get<double>() == doctest::Approx(1731.2168495754527).epsilon(1e-12));
  CHECK(payload["variance"].get<double>() == doctest::Approx(0.9677759328723698).epsilon(1e-12));
  CHECK(payload["variance"].get<double>() >= 0.0);
}

TEST_CASE("enumerate reproduces the polyonino worked example") {
  const CliResult r = run_cli("enumerate --preset polyonino --n 4 --p 0.5,0.5 --format json");
  REQUIRE(r.exit_code == 0);
  const json payload = json::parse(r.out);
  CHECK(payload["mean"].get<double>() == doctest::Approx(67.168211).epsilon(1e-8));
  CHECK(payload["sequence_count"] == 4);
  CHECK(payload["pmf"].size() == 3);
}

TEST_CASE("audit reports findings and still exits zero") {
  const CliResult r = run_cli("audit --preset pentachain --n 5 --p 0.5,0.5 --format json");
  REQUIRE(r.exit_code == 0);
  const json payload = json::parse(r.out);
  bool mismatch_for_var_so = false;
  for (const auto& row : payload["reports"]) {
    if (row["formula"] == "odd/var/so" && row["verdict"] == "mismatch") {
      mismatch_for_var_so = true;
    }
  }
  CHECK(mismatch_for_var_so);
}

TEST_CASE("identical config and seed produce byte-identical output") {
  const std::string args =
      "simulate --preset polyphenyl --n 40 --p 0.5,0.3,0.2 --samples 2000 --seed 42 --ks "
      "--format json";
  const CliResult a = run_cli(args);
  const CliResult b = run_cli(args);
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
  const json payload = json::parse(a.out);
  CHECK(payload.contains("ks_statistic"));
  CHECK(payload["seed"] == 42);

  const CliResult threaded = run_cli(args + " --threads 3");
  CHECK(threaded.out == a.out);

  // The environment thread cap must not change results either.
  const std::string env_command = std::string("SOMBORCHAIN_THREADS=2 \"") +
                                  SOMBORCHAIN_CLI_PATH + "\" " + args + " > cli_env_out.txt 2>&1";
  REQUIRE(std::system(env_command.c_str()) == 0);
  CHECK(slurp("cli_env_out.txt") == a.out);
  std::remove("cli_env_out.txt");
}

TEST_CASE("help exits cleanly") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("simulate --help").exit_code == 0);
}

TEST_CASE("normality reports closed-form parameters next to the statistic") {
  const CliResult r = run_cli(
      "normality --preset polyonino --n 100 --p 0.5,0.5 --samples 2000 --seed 7 --format json");
  REQUIRE(r.exit_code == 0);
  const json payload = json::parse(r.out);
  CHECK(payload["mu"].get<double>() > 0.0);
  CHECK(payload["sigma2"].get<double>() > 0.0);
  CHECK(payload["ks_statistic"].get<double>() <= 0.2);
}

TEST_CASE("table shows derived and printed values side by side") {
  const CliResult r = run_cli("table --k 2 --n 10 --p1 0.5 --format json");
  REQUIRE(r.exit_code == 0);
  const json payload = json::parse(r.out);
  REQUIRE(payload["rows"].size() == 12);
  bool negative_printed_variance = false;
  for (const auto& row : payload["rows"]) {
    if (row["parity"] == "even" && row["index"] == "so_red" && row["statistic"] == "variance") {
      negative_printed_variance = row["printed"].get<double>() < 0.0;
      CHECK(row["derived"].get<double>() >= 0.0);
    }
  }
  CHECK(negative_printed_variance);
}

TEST_CASE("probability lists are renormalized within the CLI tolerance and reported") {
  const CliResult ok = run_cli("moments --l 4 --n 3 --p 0.4999999,0.5 --format json");
  REQUIRE(ok.exit_code == 0);
  const json payload = json::parse(ok.out);
  CHECK(payload["probs_renormalized"] == true);
  CHECK(payload["probs_input_sum"].get<double>() == doctest::Approx(0.9999999).epsilon(1e-12));

  const CliResult bad = run_cli("moments --l 4 --n 3 --p 0.6,0.5");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("validation and guard failures map to distinct exit codes") {
  CHECK(run_cli("moments --l 6 --n 4 --p 0.5,0.5").exit_code == 2);          // wrong arity
  CHECK(run_cli("compute --l 6 --n 4 --seq 1,9").exit_code == 2);            // bad type
  CHECK(run_cli("compute --l 6 --n 4 --seq x,y").exit_code == 2);            // malformed
  CHECK(run_cli("compute --l 6 --preset polyphenyl --n 1 --seq \"\"").exit_code == 2);
  const CliResult guarded = run_cli("enumerate --l 8 --n 20 --p 0.25,0.25,0.25,0.25");
  CHECK(guarded.exit_code == 3);
  CHECK(guarded.err.find("20000000") != std::string::npos);  // guard reported with its bound
  CHECK(run_cli("nonsense --l 2").exit_code == 2);
}

TEST_CASE("audit CSV carries one row per report") {
  const CliResult r = run_cli("audit --l 4 --n 10 --p 0.5,0.5 --format csv");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("formula,statistic,n,printed,derived,abs_diff,rel_diff,verdict") == 0);
  CHECK(r.out.find("even/var/so_red,variance,10,") != std::string::npos);
  CHECK(r.out.find("impossible") != std::string::npos);
}

TEST_CASE("every subcommand emits a schema version in JSON mode") {
  for (const std::string args :
       {std::string("compute --l 4 --n 1 --seq \"\" --format json"),
        std::string("moments --l 4 --n 3 --p 0.5,0.5 --format json"),
        std::string("enumerate --l 4 --n 3 --p 0.5,0.5 --format json"),
        std::string("simulate --l 4 --n 5 --p 0.5,0.5 --samples 10 --format json"),
        std::string("normality --l 4 --n 30 --p 0.5,0.5 --samples 100 --format json"),
        std::string("audit --l 4 --n 3 --p 0.5,0.5 --format json"),
        std::string("table --k 2 --n 5 --p1 0.25 --format json")}) {
    const CliResult r = run_cli(args);
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out)["schema_version"] == 1);
  }
}

TEST_CASE("output lands in a file when requested") {
  const std::string path = "cli_file_output.json";
  const CliResult r =
      run_cli("compute --l 4 --n 1 --seq \"\" --format json --output " + path);
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.empty());
  const json payload = json::parse(slurp(path));
  CHECK(payload["command"] == "compute");
  std::remove(path.c_str());
}
