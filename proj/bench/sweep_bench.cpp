// Compares the serial sweep engine against the OpenMP one on the same grid
// and checks that both produce identical rows.

#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#else
#include <chrono>
static double omp_get_wtime() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}
static int omp_get_max_threads() { return 1; }
#endif

#include "lorenz/sweep.hpp"

int main(int argc, char** argv) {
  using namespace lorenz;
  sweep_config cfg;
  cfg.from = rational(143, 100);
  cfg.to = rational(199, 100);
  cfg.steps = argc > 1 ? static_cast<size_t>(std::atol(argv[1])) : 48;
  cfg.periods_n = 7;
  cfg.counting_n = 3000;
  cfg.cutting_depth = 256;

  std::printf("sweep of %zu slopes in [%s, %s], %d thread(s) available\n", cfg.steps,
              rational_str(cfg.from).c_str(), rational_str(cfg.to).c_str(),
              omp_get_max_threads());

  double t0 = omp_get_wtime();
  auto serial = sweep_serial(cfg);
  double t1 = omp_get_wtime();
  auto parallel = sweep_parallel(cfg);
  double t2 = omp_get_wtime();

  bool same = serial == parallel;
  double ts = t1 - t0, tp = t2 - t1;
  std::printf("serial:   %8.3f s\n", ts);
  std::printf("parallel: %8.3f s  (speedup %.2fx)\n", tp, ts / tp);
  std::printf("rows identical: %s\n", same ? "yes" : "NO");
  return same ? 0 : 1;
}
