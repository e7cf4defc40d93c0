// The acceptance suite: one entry per criterion, each returning pass/fail
// with a short detail line and its wall time.  Used by the dedicated
// acceptance binary and by the CLI verify subcommand.

#ifndef LORENZ_ACCEPT_HPP
#define LORENZ_ACCEPT_HPP

#include <string>
#include <vector>

namespace lorenz {

struct criterion_result {
  int id;
  std::string name;
  bool pass;
  std::string detail;
  double ms;
};

// suite: "all" or "paper-tables" (criteria 1-3)
std::vector<criterion_result> run_acceptance(const std::string& suite = "all");

} // namespace lorenz

#endif
