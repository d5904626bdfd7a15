#include "doctest.h"

#include "json.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

// Paths are injected by the build: the tool binary, the shipped configs and
// the golden transcripts it must keep reproducing byte for byte.
#ifndef K3LAT_BIN_PATH
#error "K3LAT_BIN_PATH must be defined"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(K3LAT_BIN_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  REQUIRE(status != -1);
  return RunResult{WEXITSTATUS(status), out};
}

std::string config(const std::string& name) {
  return std::string(K3LAT_CONFIG_DIR) + "/" + name;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("every command reproduces its golden JSON transcript") {
  for (const char* cmd : {"verify-paper", "info", "curves", "cones",
                          "involution", "dynamics", "product"}) {
    CAPTURE(cmd);
    RunResult r = run_cli(std::string(cmd) + " " + config("lambda.json") +
                          " --json");
    CHECK(r.exit_code == 0);
    CHECK(r.out == read_file(std::string(K3LAT_GOLDEN_DIR) + "/" + cmd +
                             ".json"));
  }
}

TEST_CASE("JSON output round-trips through a parser") {
  RunResult r = run_cli("verify-paper " + config("lambda.json") + " --json");
  nlohmann::ordered_json parsed = nlohmann::ordered_json::parse(r.out);
  CHECK(parsed.dump(2) + "\n" == r.out);
  CHECK(parsed["summary"]["pass"] == 19);
}

TEST_CASE("the perturbed config fails the discriminant check first") {
  RunResult r = run_cli("verify-paper " + config("lambda-perturbed.json") +
                        " --json");
  CHECK(r.exit_code == 1);
  nlohmann::ordered_json parsed = nlohmann::ordered_json::parse(r.out);
  REQUIRE(!parsed["checks"].empty());
  CHECK(parsed["checks"][0]["id"] == "discriminant");
  CHECK(parsed["checks"][0]["status"] == "fail");
  CHECK(parsed["checks"][0]["data"]["abs_determinant"] == "41");
  CHECK(parsed["summary"]["fail"].get<int>() >= 1);
}

TEST_CASE("exit codes distinguish usage, config and verdicts") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("verify-paper --help").exit_code == 0);
  CHECK(run_cli("no-such-command " + config("lambda.json")).exit_code == 64);
  CHECK(run_cli("curves " + config("lambda.json") + " --no-such-flag")
            .exit_code == 64);
  CHECK(run_cli("curves").exit_code == 64);  // missing config argument
  CHECK(run_cli("curves /no/such/config.json").exit_code == 65);
  CHECK(run_cli("cones " + config("lambda.json") + " --degree-max 3")
            .exit_code == 2);
}

TEST_CASE("text output carries one line per check") {
  RunResult r = run_cli("verify-paper " + config("lambda.json"));
  CHECK(r.exit_code == 0);
  size_t count = 0;
  std::istringstream lines(r.out);
  std::string line;
  while (std::getline(lines, line))
    if (line.rfind("[PASS]", 0) == 0) ++count;
  CHECK(count == 19);
  CHECK(r.out.find("summary: 19 passed, 0 failed, 0 inconclusive, 0 skipped") !=
        std::string::npos);
}
