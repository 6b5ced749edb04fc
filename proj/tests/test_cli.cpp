#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "oracles.hpp"

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

// Runs the installed binary with stderr dropped; stdout is captured.
CliResult run_cli(const std::string& args) {
  std::string cmd = std::string("\"") + CESARO_CLI_PATH + "\" " + args +
                    " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_csv(const std::string& stem) {
  return (std::filesystem::temp_directory_path() / (stem + ".csv")).string();
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("bell via the triangle prints the bare value") {
  CliResult r = run_cli("bell --n 10");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "115975\n");

  CliResult methods = run_cli("bell --n 7 --method stirling-sum");
  CHECK(methods.out == "877\n");
  CliResult ie = run_cli("bell --n 7 --method inclusion-exclusion");
  CHECK(ie.out == "877\n");
}

TEST_CASE("bell via the integral certifies and reports json") {
  CliResult r = run_cli("bell --n 3 --method cesaro --format json");
  REQUIRE(r.exit_code == 0);
  nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc["command"] == "bell");
  CHECK(doc["params"]["n"] == 3);
  CHECK(doc["results"][0]["rounded"] == "5");
  CHECK(doc["results"][0]["certified"] == true);
  CHECK(doc["results"][0]["nodes_used"].get<long>() >= 32);
}

TEST_CASE("bell via the series reports term count") {
  CliResult r = run_cli("bell --n 10 --method dobinski --format json");
  REQUIRE(r.exit_code == 0);
  nlohmann::json doc = nlohmann::json::parse(r.out);
  std::string est = doc["results"][0]["estimate"];
  double value = std::strtod(est.c_str(), nullptr);
  CHECK(std::abs(value - 115975.0) < 115975.0 * 1e-9);
  CHECK(est.find("e+05") != std::string::npos);
  CHECK(doc["results"][0]["terms_used"].get<long>() >= 21);
}

TEST_CASE("bad arguments exit with code 1") {
  CHECK(run_cli("bell --n 0 --method cesaro").exit_code == 1);
  CHECK(run_cli("bell --n 4 --method nope").exit_code == 1);
  CHECK(run_cli("bell").exit_code == 1);
  CHECK(run_cli("").exit_code == 1);
  CHECK(run_cli("verify --only no-such").exit_code == 1);
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("--help").out.find("bell") != std::string::npos);
}

TEST_CASE("verify subcommand runs green and its json round-trips") {
  CliResult r = run_cli("verify --max-n 2 --format json");
  REQUIRE(r.exit_code == 0);
  nlohmann::ordered_json doc = nlohmann::ordered_json::parse(r.out);
  CHECK(doc["command"] == "verify");
  CHECK(doc["all_pass"] == true);
  CHECK(doc["results"].size() > 0);
  for (const auto& item : doc["results"]) {
    CHECK(item["pass"] == true);
    CHECK(item.contains("identity"));
    CHECK(!item.contains("wall_time"));
  }
  // Parsing and re-serializing reproduces the bytes: nothing depends on
  // ephemeral state.
  CHECK(doc.dump(2) + "\n" == r.out);
}

TEST_CASE("verify human format summarizes pass counts") {
  CliResult r = run_cli("verify --max-n 1 --only typo");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("PASS typo(1)") != std::string::npos);
  CHECK(r.out.find("1 checks, 1 passed, 0 failed") != std::string::npos);
}

TEST_CASE("dump writes the sampled integrand as csv") {
  std::string path = temp_csv("cesaro_dump_n1");
  CliResult r = run_cli("dump --kind cesaro --n 1 --samples 64 --out " + path);
  REQUIRE(r.exit_code == 0);
  std::vector<std::string> lines = read_lines(path);
  REQUIRE(lines.size() == 66);  // header + samples + 1 rows
  CHECK(lines[0] == "theta,value");
  CHECK(lines[1].substr(0, 18) == "0.0000000000000000");
  CHECK(lines[1].find(",0.0000000000000000") != std::string::npos);

  // Row i sits at theta = i pi / samples; values must match an independent
  // double-precision evaluation.
  const double pi = 3.14159265358979323846;
  for (size_t i : {16u, 32u, 49u}) {
    std::istringstream row(lines[i + 1]);
    std::string theta_s, value_s;
    std::getline(row, theta_s, ',');
    std::getline(row, value_s, ',');
    double theta = std::strtod(theta_s.c_str(), nullptr);
    double value = std::strtod(value_s.c_str(), nullptr);
    CHECK(std::abs(theta - pi * static_cast<double>(i) / 64.0) < 1e-14);
    CHECK(std::abs(value - oracle::cesaro_real_ref(1, theta)) < 1e-9);
  }
  std::filesystem::remove(path);
}

TEST_CASE("dump covers the other integrand families") {
  std::string path = temp_csv("sines_dump");
  CliResult r =
      run_cli("dump --kind sines --m 3 --n 5 --samples 40 --out " + path);
  REQUIRE(r.exit_code == 0);
  std::vector<std::string> lines = read_lines(path);
  REQUIRE(lines.size() == 42);
  for (size_t i = 1; i < lines.size(); ++i) {
    std::string value_s = lines[i].substr(lines[i].find(',') + 1);
    CHECK(std::abs(std::strtod(value_s.c_str(), nullptr)) <= 1.0 + 1e-12);
  }
  std::filesystem::remove(path);

  CHECK(run_cli("dump --kind power --j 2 --n 3 --samples 8 --out " +
                temp_csv("power_dump"))
            .exit_code == 0);
  std::filesystem::remove(temp_csv("power_dump"));
}

TEST_CASE("dump rejects stray or missing kernel parameters") {
  std::string path = temp_csv("never_written");
  CHECK(run_cli("dump --kind cesaro --n 2 --j 1 --out " + path).exit_code == 1);
  CHECK(run_cli("dump --kind power --n 2 --out " + path).exit_code == 1);
  CHECK(run_cli("dump --kind block --n 2 --k 1 --m 0 --out " + path)
            .exit_code == 1);
  CHECK(run_cli("dump --kind nope --n 2 --out " + path).exit_code == 1);
  CHECK(!std::filesystem::exists(path));
  CHECK(run_cli("dump --kind cesaro --n 2 --out /nonexistent-dir/x.csv")
            .exit_code == 1);
}
