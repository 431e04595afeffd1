#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace valkit::selfcheck {

// One registered end-to-end property check. The same registry backs the
// acceptance binary and the `check` CLI command, so the gate and the
// shipped self-test can never drift apart.
struct CriterionResult {
  bool pass = false;
  std::string detail;  // one-line outcome summary with the worst case
  double seconds = 0;  // wall time, filled by run_criterion
};

struct Criterion {
  int number = 0;
  std::string name;
  double budget_seconds = 0;  // part of the verdict, not advisory
  std::function<CriterionResult(std::uint64_t seed)> run;
};

const std::vector<Criterion>& criteria();

// Run one criterion, measure it, and fold the time budget into the
// verdict: a correct but overdue run does not pass.
CriterionResult run_criterion(const Criterion& c, std::uint64_t seed);

// "PASS  3 weight-tangent-duality ..." one-liner for reports.
std::string format_result(const Criterion& c, const CriterionResult& r);

}  // namespace valkit::selfcheck
