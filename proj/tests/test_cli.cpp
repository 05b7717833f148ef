// End-to-end checks of the installed CLI: exit codes and golden stdout.

#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(FLAGEIN_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf{};
  size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(FLAGEIN_GOLDEN_DIR) + "/" + name, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), name);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run("list A 5").exit_code == 0);           // empty result is still success
  CHECK(run("list E 8").exit_code == 0);
  CHECK(run("analyze G 2 1").exit_code == 0);
  CHECK(run("analyze C 6 6").exit_code == 3);      // height-one painting
  CHECK(run("analyze A 5 2").exit_code == 3);
  CHECK(run("analyze D 3 1").exit_code == 2);      // invalid type
  CHECK(run("analyze E 6 9").exit_code == 2);      // node out of range
  CHECK(run("list X 4").exit_code == 2);
  CHECK(run("verify 1").exit_code == 2);           // invalid bound
  CHECK(run("verify 3").exit_code == 0);
  CHECK(run("--version").exit_code == 0);
  CHECK(run("bogus").exit_code == 2);
}

TEST_CASE("list output matches the golden files") {
  CHECK(run("list F 4 --format csv").out == golden("list_f4.csv"));
  CHECK(run("list E 8").out == golden("list_e8.txt"));
  CHECK(run("list E 8 --dedup --format json").out == golden("list_e8_dedup.json"));
}

TEST_CASE("analyze output matches the golden files") {
  CHECK(run("analyze G 2 1 --format json").out == golden("analyze_g2_node1.json"));
  CHECK(run("analyze E 6 2 --format json").out == golden("analyze_e6_node2.json"));
}

TEST_CASE("A5 lists no spaces") {
  CHECK(run("list A 5 --format csv").out == "node,k,orbit,d1,d2,t,x2_non_kaehler\n");
}

TEST_CASE("verify reports the battery") {
  const auto r = run("verify 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("all checks passed") != std::string::npos);
}
