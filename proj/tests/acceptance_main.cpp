// Dedicated acceptance binary: one pass/fail line per criterion.

#include <cstdio>
#include <string>

#include "lorenz/accept.hpp"

int main(int argc, char** argv) {
  std::string suite = argc > 1 ? argv[1] : "all";
  auto results = lorenz::run_acceptance(suite);
  bool all = true;
  for (const auto& r : results) {
    std::printf("%s  criterion %2d: %s  (%.2f ms)%s%s\n", r.pass ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.ms, r.detail.empty() ? "" : "  ",
                r.detail.c_str());
    all = all && r.pass;
  }
  std::printf("%s\n", all ? "acceptance: all criteria passed"
                          : "acceptance: SOME CRITERIA FAILED");
  return all ? 0 : 1;
}
