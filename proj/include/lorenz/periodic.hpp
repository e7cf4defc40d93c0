// Sharkovsky order, exact lap-based periodic orbit enumeration for
// piecewise-affine maps, forcing witnesses, and the closure/type verdicts.
//
// Maps are enumerated with interval semantics: the endpoints 0 and 1 (or 2)
// are distinct points, no circle identification is applied.

#ifndef LORENZ_PERIODIC_HPP
#define LORENZ_PERIODIC_HPP

#include <map>
#include <string>
#include <vector>

#include "lorenz/maps.hpp"
#include "lorenz/symbolic.hpp"

namespace lorenz {

enum class shark_order { precedes, equal, succeeds };

// 1 < 2 < 4 < ... < 4*7 < 4*5 < 4*3 < ... < 2*7 < 2*5 < 2*3 < ... < 7 < 5 < 3
shark_order sharkovsky_compare(unsigned long m, unsigned long n);

struct period_witness {
  exact_scalar x;
  int orientation; // sign of (g^m)' on the containing lap
};

struct period_report {
  std::string map_id;
  size_t max_period = 0;
  std::map<size_t, std::vector<period_witness>> periods; // prime period -> witnesses

  bool has(size_t m) const { return periods.count(m) && !periods.at(m).empty(); }
  std::vector<size_t> present() const;
};

period_report enumerate_periods(const map_spec& g, size_t N, size_t lap_budget = 2000000);

struct forcing_witness {
  size_t m;
  symbol_seq e;       // parity-lex maximal admissible m-periodic itinerary
  symbol_seq e_prime; // last symbol of each period flipped
  enum class case_t { prime_m_increasing, prime_half_decreasing } witness_case;
};

forcing_witness forcing_witnesses(const symbol_seq& nu, size_t m);

enum class closure_mode { unimodal, increasing_lorenz, decreasing_lorenz };

struct closure_verdict {
  bool pass = true;
  // (present period n, forced-but-missing period m)
  std::vector<std::pair<size_t, size_t>> violations;
};

closure_verdict verify_sharkovsky_closure(const period_report& r, closure_mode mode);

enum class type_class { power_of_two, two_infinity_compatible, beyond };

struct type_result {
  type_class cls;
  unsigned r = 0; // exponent for power_of_two
};

type_result classify_type(const period_report& r);

} // namespace lorenz

#endif
