// Hofbauer tower levels, cutting and co-cutting times, kneading maps,
// closest precritical points and the long-branched test.
//
// Tower endpoints carry a one-sided marker driven by the limit orbit of the
// critical value, so a map whose critical point is exactly periodic (golden
// tent) produces the same cutting set as the symbolic rho-iteration.  For
// rational tent slopes the critical orbit never returns to c and the marker
// never matters.

#ifndef LORENZ_KNEADING_HPP
#define LORENZ_KNEADING_HPP

#include <optional>
#include <vector>

#include "lorenz/maps.hpp"
#include "lorenz/symbolic.hpp"

namespace lorenz {

struct tower_level {
  size_t n;
  exact_scalar lo, hi;
  bool is_cutting;
};

std::vector<tower_level> hofbauer_levels(const map_spec& f, size_t N);

struct cutting_data {
  std::vector<size_t> S;    // cutting times, S[0] = 1
  std::vector<size_t> Shat; // co-cutting times, Shat[0] = kappa
  // Q[k] solves S[Q[k]] = S[k] - S[k-1] for k >= 1; Q[0] = 0 by convention
  std::vector<size_t> Q;
  std::vector<size_t> Qhat; // S[Qhat[k]] = Shat[k] - Shat[k-1]
  size_t depth = 0;
  std::optional<size_t> kappa;
  bool s_terminated = false;    // rho hit a provably infinite match
  bool shat_terminated = false;

  size_t sup_Q() const;
};

cutting_data cutting_data_symbolic(const symbol_seq& nu, size_t depth);

struct precritical_ladder {
  std::vector<exact_scalar> zetas; // zeta_0 .. zeta_K, increasing toward c
  std::vector<size_t> orders;      // S_0 .. S_K
};

precritical_ladder closest_precriticals(const map_spec& f, size_t K);

enum class lb_status { yes, no, unknown };

struct long_branched_result {
  lb_status status;
  size_t sup_q;
  size_t depth;
};

// "yes" needs an eventually periodic kneading sequence whose kneading map
// settles into a verified cycle; everything else is depth-qualified
long_branched_result is_long_branched(const cutting_data& cd, bool nu_eventually_periodic);

} // namespace lorenz

#endif
