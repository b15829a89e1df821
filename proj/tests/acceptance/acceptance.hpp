#pragma once

#include <functional>
#include <string>
#include <vector>

namespace s4e::acceptance {

struct CriterionOutcome {
  int id = 0;
  std::string name;
  bool passed = false;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string detail; // counts, and the first failure if any
  double seconds = 0;
};

struct CriterionInfo {
  int id;
  std::string name;
};
std::vector<CriterionInfo> criteria();

CriterionOutcome run_criterion(int id);

// Runs every criterion in order; `on_done` sees each outcome as it finishes.
std::vector<CriterionOutcome>
run_all(const std::function<void(const CriterionOutcome &)> &on_done = {});

// "criterion 3 realization round trip: PASS (... ; 12.3 s)"
std::string format_line(const CriterionOutcome &o);

} // namespace s4e::acceptance
