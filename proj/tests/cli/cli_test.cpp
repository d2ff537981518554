#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "iwasawa/report.hpp"
#include "json.hpp"

namespace {

struct Result {
  int code = -1;
  std::string out;
};

// Runs the tool; stderr is merged into the output when merge_stderr is set, otherwise discarded.
Result run_tool(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = std::string(QG_TOOL) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(QG_DATA) + "/" + name; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("golden machine report") {
  const auto r = run_tool(data("c9_gamma4.qg") + " --format machine");
  CHECK(r.code == 0);
  CHECK(r.out == read_file(std::string(QG_GOLDEN) + "/c9_gamma4.json"));
}

TEST_CASE("golden full report with an f prime") {
  const auto r = run_tool(data("c9_gamma4_full.qg") + " --format machine");
  CHECK(r.code == 0);
  CHECK(r.out == read_file(std::string(QG_GOLDEN) + "/c9_gamma4_full.json"));
}

TEST_CASE("determinism and round trip") {
  for (const char* name : {"c9_gamma4.qg", "heisenberg3.qg", "c27_gamma10.qg", "c3_table.qg", "trivial.qg"}) {
    const auto a = run_tool(data(name) + " --format machine");
    const auto b = run_tool(data(name) + " --format machine");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const auto report = iwasawa::parse_machine(a.out);
    CHECK(iwasawa::emit_machine(report) == a.out);
  }
}

TEST_CASE("text report") {
  const auto r = run_tool(data("heisenberg3.qg"));
  CHECK(r.code == 0);
  CHECK(r.out.find("6 components, total dimension 27") != std::string::npos);
  CHECK(r.out.find("fail") == std::string::npos);
}

TEST_CASE("diagnostics exit with 1") {
  const auto even = run_tool(data("bad_even_l.qg"), true);
  CHECK(even.code == 1);
  CHECK(even.out.find("bad_even_l.qg:1: l must be odd") != std::string::npos);

  const auto gamma = run_tool(data("bad_gamma_order.qg"), true);
  CHECK(gamma.code == 1);
  CHECK(gamma.out.find(":5: automorphism order 6 is not a power of 3") != std::string::npos);

  const auto machine = run_tool(data("bad_gamma_order.qg") + " --format machine");
  CHECK(machine.code == 1);
  const auto j = nlohmann::json::parse(machine.out);
  REQUIRE(j.at("diagnostics").size() == 1);
  CHECK(j["diagnostics"][0]["line"] == 5);

  CHECK(run_tool(data("does_not_exist.qg")).code == 1);
  CHECK(run_tool(data("c27_gamma10.qg") + " --max-order 9").code == 1);
  CHECK(run_tool(data("c9_gamma4.qg") + " --primes f:1:1").code == 1);
  CHECK(run_tool(data("c9_gamma4.qg") + " --format yaml").code != 0);
}

TEST_CASE("a failing suite exits with 2 and prints its witness") {
  const auto r = run_tool(data("c9_gamma4.qg") + " --verify full --series-precision 3", true);
  CHECK(r.code == 2);
  CHECK(r.out.find("suite weierstrass failed") != std::string::npos);
  CHECK(r.out.find("needs series precision above 3") != std::string::npos);
}

TEST_CASE("flags override the document") {
  const auto r = run_tool(data("c9_gamma4.qg") + " --format machine --verify full --series-precision 12 --primes T,f:3:0:1");
  CHECK(r.code == 0);
  const auto report = iwasawa::parse_machine(r.out);
  CHECK(report.verify == "full");
  CHECK(report.series_precision == 12);
  CHECK(report.report_primes == std::vector<std::string>{"T", "f:3:0:1"});
  CHECK(report.components.front().completions.size() == 2);
}
