// Acceptance gate: runs the fourteen criterion suites in order and prints
// one PASS/FAIL line per criterion. Exits nonzero if any criterion fails.

#include <cstdio>

#include "jsub/verify.hpp"

int main() {
  bool ok = true;
  for (const jsub::Suite& suite : jsub::all_suites()) {
    if (suite.criterion == 0) continue;
    jsub::SuiteResult result = suite.run();
    ok = ok && result.passed;
    std::printf("%s\n", jsub::format_result_line(result, suite.criterion).c_str());
    std::fflush(stdout);
  }
  std::printf("%s\n", ok ? "ACCEPTANCE: all criteria passed"
                         : "ACCEPTANCE: criteria FAILED");
  return ok ? 0 : 1;
}
