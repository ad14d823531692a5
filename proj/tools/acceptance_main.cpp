// Prints one PASS/FAIL line per acceptance criterion.
// --expect-fail lists criteria known to fail: the exit status is 0 exactly when
// the failing set equals that list, so an unexpected pass is also reported.
#include <CLI11.hpp>

#include <iostream>
#include <set>

#include "pcompact/acceptance.hpp"

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria", "pcompact-acceptance"};
  int tier = 3;
  std::vector<int> only, expect_fail;
  bool quiet = false;
  app.add_option("--tier", tier)->check(CLI::Range(1, 3));
  app.add_option("--only", only)->delimiter(',');
  app.add_option("--expect-fail", expect_fail)->delimiter(',');
  app.add_flag("-q,--quiet", quiet);
  CLI11_PARSE(app, argc, argv);

  pcompact::AcceptanceOptions opts;
  opts.max_tier = tier;
  opts.only.insert(only.begin(), only.end());
  opts.on_result = [&](const pcompact::CriterionResult& r) { std::cout << pcompact::format_result(r, !quiet) << std::flush; };
  std::set<int> failed;
  int passed = 0, skipped = 0;
  for (const auto& r : pcompact::run_acceptance(opts)) {
    if (r.skipped) ++skipped;
    else if (r.pass) ++passed;
    else failed.insert(r.number);
  }
  std::cout << "\n" << passed << " passed, " << failed.size() << " failed, " << skipped << " skipped\n";
  const std::set<int> expected(expect_fail.begin(), expect_fail.end());
  if (failed == expected) return 0;
  for (int n : expected)
    if (!failed.count(n)) std::cout << "criterion " << n << " was expected to fail but passed\n";
  for (int n : failed)
    if (!expected.count(n)) std::cout << "criterion " << n << " failed unexpectedly\n";
  return 1;
}
