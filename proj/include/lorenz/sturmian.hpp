// Rotational sequences and finite-depth Sturmian proxies: balancedness and
// factor complexity.

#ifndef LORENZ_STURMIAN_HPP
#define LORENZ_STURMIAN_HPP

#include <optional>
#include <vector>

#include "lorenz/exact.hpp"
#include "lorenz/symbolic.hpp"

namespace lorenz {

struct rotational_word {
  symbol_seq word; // conventions: 0 is "in", alpha is "out"
  // first j >= 1 with {j alpha + beta} exactly 0; the sided words record the
  // two perturbed codings from that point on
  std::optional<size_t> boundary_hit;
  std::optional<symbol_seq> lower, upper;
};

// u_n = 1 iff R_alpha^n(beta) lies in [0, alpha), n = 0 .. n-1
rotational_word rotational_sequence(const exact_scalar& alpha, const exact_scalar& beta,
                                    size_t n);

// 1-counts of any two equal-length factors differ by at most 1, lengths
// up to maxlen
bool is_balanced(const symbol_seq& w, size_t maxlen);

// p(l) = number of distinct length-l factors, l = 1..maxlen; requires the
// word to be at least 10 * maxlen long
std::vector<size_t> factor_complexity(const symbol_seq& w, size_t maxlen);

} // namespace lorenz

#endif
