#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

// End-to-end checks of the command-line adapter: every verb is a thin
// wrapper over the library, so its stdout is pinned against golden files
// computed from the library's own oracle-verified values.

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

std::string cli_path() {
  const char* p = std::getenv("JSUB_CLI");
  REQUIRE_MESSAGE(p != nullptr, "JSUB_CLI must point at the built binary");
  return p;
}

std::string golden_dir() {
  const char* p = std::getenv("JSUB_GOLDEN");
  REQUIRE_MESSAGE(p != nullptr, "JSUB_GOLDEN must point at tests/golden");
  return p;
}

RunResult run(const std::string& args) {
  std::string cmd = cli_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  return RunResult{WEXITSTATUS(status), out};
}

std::string golden(const std::string& name) {
  std::ifstream in(golden_dir() + "/" + name, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), ("missing golden file " + name).c_str());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void check_golden(const std::string& args, const std::string& file) {
  CAPTURE(args);
  RunResult r = run(args);
  CHECK(r.exit_code == 0);
  CHECK(r.out == golden(file));
}

}  // namespace

TEST_CASE("computation verbs match their golden output") {
  check_golden("compose --ring int --prec 3 \"x + x^2\" \"x + x^2\"",
               "compose_human.txt");
  check_golden(
      "compose --ring int --prec 3 --structured \"x + x^2\" \"x + x^2\"",
      "compose_structured.txt");
  check_golden("invert --ring int --prec 5 --list \"x + x^2\"",
               "invert_list.txt");
  check_golden("root --ring rat --prec 3 --k 2 \"x + x^2\"", "root_human.txt");
  check_golden("separate --ring int --prec 2 --p 2 \"x + 4*x^2\"",
               "separate_human.txt");
  check_golden("enumerate --ring mod:2 --prec 2", "enumerate.txt");
  check_golden("theta --ring rat --prec 2 --s 2 \"x + x^2\"",
               "theta_human.txt");
  check_golden("depth --ring int \"[0, 5, 1]\"", "depth_infer.txt");
  check_golden(
      "dilate --ring erdos --t \"(2;)\" --list \"[(1; 1:1), (0; 2:1)]\"",
      "dilate_erdos.txt");
  check_golden("commutator --ring int --prec 4 \"x + x^2\" \"x + x^3\"",
               "commutator_human.txt");
  check_golden("exp --ring rat --prec 4 e1", "exp_human.txt");
  check_golden("log --ring rat --prec 2 \"x + x^2\"", "log_human.txt");
  check_golden("bracket --ring rat --prec 8 e1 e2", "bracket_human.txt");
  check_golden("theta-star --ring rat --prec 8 --s 2 e1",
               "theta_star_human.txt");
  check_golden("order --ring mod:2 \"[1, 0]\"", "order_human.txt");
  check_golden("project --ring int --prec 3 --k 2 \"x + x^2\"",
               "project_human.txt");
}

TEST_CASE("identical requests produce byte-identical structured output") {
  std::string args =
      "compress --ring mod:3 --prec 4 --s 3 --structured \"x + 2*x^2\"";
  RunResult a = run(args);
  RunResult b = run(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
}

TEST_CASE("exit code 1 on usage and parse errors") {
  CHECK(run("compose --ring int --prec 3 \"x + x^2\"").exit_code == 1);
  CHECK(run("compose --ring int \"x + x^2\" \"x + x^2\"").exit_code == 1);
  CHECK(run("compose --ring int --prec 3 \"x^2 + x\" \"x\"").exit_code == 1);
  CHECK(run("compose --ring float --prec 3 \"x\" \"x\"").exit_code == 1);
  CHECK(run("verify --suite no-such-suite").exit_code == 1);
  CHECK(run("frobnicate").exit_code == 1);
  CHECK(run("compose --ring int --prec 2 \"[1, 2, 3]\" \"x\"").exit_code == 1);
}

TEST_CASE("exit code 2 on domain errors") {
  RunResult r = run("decompress --ring int --s 2 \"[0, 2, 0]\"");
  CHECK(r.exit_code == 2);
  CHECK(run("theta --ring int --prec 2 --s 2 \"x + x^2\"").exit_code == 2);
  CHECK(run("root --ring mod:5 --prec 3 --k 2 \"x + x^2\"").exit_code == 2);
  CHECK(run("project --ring int --prec 2 --k 5 \"x + x^2\"").exit_code == 2);
  CHECK(run("enumerate --ring mod:10 --prec 8").exit_code == 2);
}

TEST_CASE("verify runs a named suite") {
  RunResult r = run("verify --suite binomial-root-lemma");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(r.out.find("binomial-root-lemma") != std::string::npos);
}

TEST_CASE("bench emits well-formed CSV") {
  RunResult r = run("bench --ring mod:2147483647 --sizes 16 --kernels horner");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("kernel,precision,repetitions,nanos\n", 0) == 0);
  std::size_t lines = 0;
  for (char c : r.out)
    if (c == '\n') ++lines;
  CHECK(lines == 2);
  CHECK(r.out.find("horner,16,") != std::string::npos);
}
