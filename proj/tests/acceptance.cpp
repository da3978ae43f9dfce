// Runs every acceptance criterion and prints one line per criterion.
#include <cstdio>

#include "susy/selftest.hpp"

int main() {
  auto results = susy::run_acceptance();
  int failures = 0;
  for (const auto& r : results) {
    std::printf("criterion-%02d %s %s: %s\n", r.id, r.passed ? "PASS" : "FAIL",
                r.name.c_str(), r.detail.c_str());
    if (!r.passed) ++failures;
  }
  std::printf("%d/%d criteria passed\n", static_cast<int>(results.size()) - failures,
              static_cast<int>(results.size()));
  return failures == 0 ? 0 : 1;
}
