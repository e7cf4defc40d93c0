// Parameter sweeps over tent slopes.  Each grid cell is an independent pure
// computation, so the parallel engine shards cells across OpenMP threads;
// the serial engine is the reference the tests and the benchmark compare
// against.  Row order is fixed by the grid, not by completion time.

#ifndef LORENZ_SWEEP_HPP
#define LORENZ_SWEEP_HPP

#include <string>
#include <vector>

#include "lorenz/exact.hpp"

namespace lorenz {

struct sweep_config {
  rational from{rational(11, 10)};
  rational to{rational(2)};
  size_t steps = 10;
  size_t kneading_depth = 64;
  size_t periods_n = 6;
  size_t counting_n = 2000;
  size_t cutting_depth = 256;
  bool with_periods = true;
  bool with_rotation = true;
};

struct sweep_row {
  rational lambda;
  std::string nu_prefix;
  std::vector<size_t> cutting_times;
  size_t sup_q = 0;
  // counting route
  rational alpha_est, alpha_half_width;
  // cutting route
  std::string cutting_status;
  rational cut_alpha_lo, cut_alpha_hi;
  rational height_lo, height_hi;
  // period structure
  std::vector<size_t> phi_periods, psi_periods;
  bool phi_closure_ok = true, psi_closure_ok = true;

  bool operator==(const sweep_row& o) const;
};

sweep_row sweep_cell(const rational& lambda, const sweep_config& cfg);

std::vector<sweep_row> sweep_serial(const sweep_config& cfg);
std::vector<sweep_row> sweep_parallel(const sweep_config& cfg);

std::vector<rational> sweep_grid(const sweep_config& cfg);

} // namespace lorenz

#endif
