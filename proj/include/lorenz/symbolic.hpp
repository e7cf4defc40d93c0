// Words over {0,1} with optional eventual period, the parity-lexicographic
// order, itineraries with one-sided limits at critical hits, the modified
// kneading sequence, the rho function, theta sign coding and the Lorenz
// recoding nu -> nu^phi.
//
// Indexing is 1-based throughout, matching the usual kneading conventions.

#ifndef LORENZ_SYMBOLIC_HPP
#define LORENZ_SYMBOLIC_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lorenz/maps.hpp"

namespace lorenz {

struct symbol_seq {
  std::vector<uint8_t> prefix;
  std::vector<uint8_t> period; // empty = plain finite word
  enum class limit_side_t { none, lower, upper };
  limit_side_t limit_side = limit_side_t::none;

  static symbol_seq finite(std::vector<uint8_t> w);
  static symbol_seq periodic(std::vector<uint8_t> pre, std::vector<uint8_t> per);
  // "10(011)" = prefix 10, repeating suffix 011; "(101)" = purely periodic
  static symbol_seq from_string(const std::string& s);
  std::string to_string() const;

  bool infinite() const { return !period.empty(); }
  size_t preperiod() const { return prefix.size(); }
  // number of symbols that can be read; huge sentinel when periodic
  size_t available() const;
  bool has_index(size_t k) const { return infinite() || k <= prefix.size(); }
  int at(size_t k) const; // 1-based

  symbol_seq shift(size_t n) const;
  std::vector<uint8_t> take(size_t n) const;
  bool same_sequence(const symbol_seq& o) const; // equality as (eventually periodic) objects
  size_t ones_in_prefix(size_t n) const;
};

enum class ordering { less, equal, greater, undecided };

// lexicographic with direction flipped after an odd number of 1s in the
// common prefix; eventually periodic inputs are decided exactly
ordering parity_lex_compare(const symbol_seq& u, const symbol_seq& v, size_t depth);

struct theta_seq {
  std::vector<int> signs; // theta_0 .. theta_n
};

struct itinerary_result {
  symbol_seq principal;
  bool critical_hit = false;
  size_t hit_step = 0; // 0-based orbit index of the first exact hit
  std::optional<symbol_seq> lower, upper;
};

// word of length n for the orbit of x; an exact critical hit yields the two
// one-sided limit words, the principal one being the parity-lex smaller
itinerary_result itinerary(const map_spec& g, const exact_scalar& x, size_t n);

// modified kneading sequence nu = lim_{x->c-} itin(x) with the zeroth symbol
// dropped; detects an exactly periodic critical orbit and returns the
// eventually periodic word
symbol_seq kneading_sequence(const map_spec& f, size_t depth);

struct rho_result {
  enum class kind_t { value, infinite, depth_exceeded } kind;
  size_t value = 0;
};

// first k > n with e_k != nu_{k-n}; "infinite" when the tails agree as
// periodic objects
rho_result rho(const symbol_seq& e, const symbol_seq& nu, size_t n);

theta_seq theta_signs(const symbol_seq& nu, size_t n);

// nu^phi_k = (1 - theta_k)/2, i.e. the running parity of nu
symbol_seq lorenz_recode(const symbol_seq& nu, size_t n);
symbol_seq lorenz_decode(const symbol_seq& nuphi);

enum class tristate { yes, no, undecided };

// sigma(nu) <= sigma^n(e) <= nu in parity-lex for all n < depth
tristate is_admissible(const symbol_seq& e, const symbol_seq& nu, size_t depth);

symbol_seq feigenbaum_prefix(size_t n);

} // namespace lorenz

#endif
