#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

namespace pcompact {

struct CheckLine {
  std::string label;
  bool pass = false;
  std::string detail;
};

struct CriterionResult {
  int number = 0;
  std::string title;
  int tier = 1;
  bool skipped = false;  // tier above the requested maximum
  bool pass = false;
  double seconds = 0;
  std::vector<CheckLine> lines;
  std::string error;  // set when the check threw
};

// Tier 1: seconds. Tier 2: minutes. Tier 3: opt-in stress.
int criterion_tier(int number);
std::string criterion_title(int number);
constexpr int kCriterionCount = 13;

struct AcceptanceOptions {
  int max_tier = 2;
  std::set<int> only;  // empty means all
  std::function<void(const CriterionResult&)> on_result;
};

CriterionResult run_criterion(int number);
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts);

// "PASS  7  Integrality ... (12.3 s)" plus indented sub-lines.
std::string format_result(const CriterionResult& r, bool with_lines = true);

}  // namespace pcompact
