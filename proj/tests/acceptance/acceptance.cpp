// One line per acceptance criterion. A criterion passes when its suite passes
// and finishes within the pinned time limit. `--verbose` prints sub-checks.

#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "rbcat_tools/suites.hpp"

using namespace rbcat::tools;

namespace {

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<SuiteResult()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const bool verbose = argc > 1 && std::strcmp(argv[1], "--verbose") == 0;
  const std::vector<Criterion> criteria = {
      {1, "enumeration round-trip", 5, [] { return suite_enumeration(); }},
      {2, "martingale fairness", 10, [] { return suite_fairness(); }},
      {3, "circuit halving", 60, [] { return suite_halving(); }},
      {4, "derandomization diagonalizer", 60, [] { return suite_derand(); }},
      {5, "diagonal language meets-all", 30, [] { return suite_diag_global(); }},
      {6, "local diagonal", 30, [] { return suite_diag_local(); }},
      {7, "Banach-Mazur conversions", 30, [] { return suite_games(); }},
      {8, "SPARSE meagerness", 10, [] { return suite_sparse(); }},
      {9, "Sigma-0-2 avoider", 20, [] { return suite_sigma2(); }},
      {10, "measure vs category", 20, [] { return suite_generic(); }},
      {11, "union combinator", 5, [] { return suite_union(); }},
      {12, "amplification", 20, [] { return suite_amplify(); }},
      {13, "query-set enforcement", 10, [] { return suite_query_sets(); }},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const SuiteResult r = c.run();
    const bool in_time = r.seconds <= c.limit_seconds;
    const bool ok = r.pass && in_time;
    failures += !ok;
    std::printf("[%s] %2d %-30s %8.3f s (limit %g s)%s\n", ok ? "PASS" : "FAIL", c.id, c.title, r.seconds,
                c.limit_seconds, in_time ? "" : " TIME LIMIT EXCEEDED");
    if (verbose || !r.pass) {
      for (const auto& line : r.details) std::printf("       %s\n", line.c_str());
    }
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
