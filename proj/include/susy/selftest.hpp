#pragma once

#include <string>
#include <vector>

namespace susy {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

// Runs the acceptance criteria in order; `only` = 0 runs all of them,
// otherwise just the one with that id (1..10).
std::vector<CriterionResult> run_acceptance(int only = 0);

}  // namespace susy
