#include "acceptance/acceptance.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

// acceptance [id ...]: one PASS/FAIL line per criterion, exit 1 on any failure.
int main(int argc, char **argv) {
  using namespace s4e::acceptance;
  std::size_t failed = 0, run = 0;
  auto report = [&](const CriterionOutcome &o) {
    std::cout << format_line(o) << std::endl;
    ++run;
    failed += !o.passed;
  };
  if (argc > 1) {
    for (int i = 1; i < argc; ++i) report(run_criterion(std::atoi(argv[i])));
  } else {
    run_all(report);
  }
  std::cout << run - failed << "/" << run << " criteria passed" << std::endl;
  return failed ? 1 : 0;
}
