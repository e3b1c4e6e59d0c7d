#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(SOLGRAPH_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf;
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("sol subcommand", "[cli]") {
  RunResult r = run_cli("sol --group A5 --element \"(1 2 3)\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("cardinality: 24") != std::string::npos);
  CHECK(r.out.find("is_subgroup: no") != std::string::npos);

  SECTION("membership failures are usage errors") {
    CHECK(run_cli("sol --group A5 --element \"(1 2)\"").exit_code == 2);
  }
  SECTION("parse failures are usage errors") {
    CHECK(run_cli("sol --group A5 --element \"(1 2\"").exit_code == 2);
    CHECK(run_cli("sol --group A5 --element \"(1 9)\"").exit_code == 2);
  }
  SECTION("unknown groups are usage errors") {
    CHECK(run_cli("sol --group NOPE --element \"(1 2)\"").exit_code == 2);
  }
  SECTION("json output") {
    RunResult j = run_cli("sol --group A5 --element \"(1 2 3)\" --json --members");
    CHECK(j.exit_code == 0);
    nlohmann::json parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["cardinality"] == 24);
    CHECK(parsed["is_subgroup"] == false);
    CHECK(parsed["members"].size() == 24);
  }
}

TEST_CASE("catalog subcommand", "[cli]") {
  RunResult r = run_cli("catalog");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("A5") != std::string::npos);
  CHECK(r.out.find("order 60") != std::string::npos);
  CHECK(r.out.find("PSL2-11") != std::string::npos);
}

TEST_CASE("graph subcommand", "[cli]") {
  std::string dot1 = "/tmp/solgraph_test_s3_a.dot";
  std::string dot2 = "/tmp/solgraph_test_s3_b.dot";
  RunResult r = run_cli("graph --group S3 --stats --dot " + dot1);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("vertices: 6") != std::string::npos);
  CHECK(r.out.find("edges: 15") != std::string::npos);
  CHECK(r.out.find("complete: yes") != std::string::npos);

  RunResult r2 = run_cli("graph --group S3 --stats --dot " + dot2);
  CHECK(r2.exit_code == 0);
  CHECK(slurp(dot1) == slurp(dot2));
  CHECK(slurp(dot1).find(" -- ") != std::string::npos);
  CHECK(slurp(dot1).find("label=\"(1 2 3)\"") != std::string::npos);
  std::remove(dot1.c_str());
  std::remove(dot2.c_str());

  SECTION("index labels") {
    std::string dot3 = "/tmp/solgraph_test_s3_idx.dot";
    CHECK(run_cli("graph --group S3 --dot " + dot3 + " --labels indices").exit_code == 0);
    std::string text = slurp(dot3);
    CHECK(text.find("label=\"0\"") != std::string::npos);
    CHECK(text.find("label=\"(1 2 3)\"") == std::string::npos);
    std::remove(dot3.c_str());
  }
  SECTION("bad label mode is a usage error") {
    CHECK(run_cli("graph --group S3 --labels nope").exit_code == 2);
  }
}

TEST_CASE("radical subcommand", "[cli]") {
  RunResult r = run_cli("radical --group A5xC2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("radical_size: 2") != std::string::npos);
  CHECK(r.out.find("verified_normal: yes") != std::string::npos);
}

TEST_CASE("verify subcommand exit codes", "[cli]") {
  SECTION("clean run exits 0") {
    RunResult r = run_cli("verify --group A5 --suite lem_six_values,cor_geq_10");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
  }
  SECTION("unknown suite ids exit 2") {
    CHECK(run_cli("verify --group A5 --suite no_such_check").exit_code == 2);
  }
  SECTION("an injected fault exits 1") {
    RunResult r = run_cli("verify --group A5 --suite thompson_complete --inject-fault");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("FAIL") != std::string::npos);
  }
  SECTION("json report is written") {
    std::string path = "/tmp/solgraph_test_report.json";
    RunResult r = run_cli("verify --group C6 --json " + path);
    CHECK(r.exit_code == 0);
    nlohmann::json parsed = nlohmann::json::parse(slurp(path));
    CHECK(parsed["tool_version"].is_string());
    CHECK(parsed["checks"].size() == 18);
    std::remove(path.c_str());
  }
}

TEST_CASE("usage errors", "[cli]") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("sol --group A5").exit_code == 2);  // missing --element
  CHECK(run_cli("--help").exit_code == 0);
}
