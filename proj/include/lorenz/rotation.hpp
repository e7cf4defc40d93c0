// Rotation numbers of stunted Lorenz maps: direct lift counting and the
// cutting-time route through the symbolic (b~, b) band; heights; Ostrowski
// cutting times; the two kneading-sequence generators (Ostrowski Q -> infty
// and the Denjoy case Q <= 1); slope realization by bisection.

#ifndef LORENZ_ROTATION_HPP
#define LORENZ_ROTATION_HPP

#include <optional>
#include <vector>

#include "lorenz/kneading.hpp"
#include "lorenz/maps.hpp"
#include "lorenz/symbolic.hpp"

namespace lorenz {

// value = [0; a_1, a_2, ...]; quotients repeat from periodic_from (index
// into a) when periodic_from < a.size()
struct continued_fraction {
  std::vector<long> a;
  size_t periodic_from = static_cast<size_t>(-1);

  bool periodic() const { return periodic_from < a.size(); }
  long quotient(size_t i) const; // 1-based a_i with periodic extension
  exact_scalar value() const;    // exact: rational or quadratic
  std::vector<mpz_class> denominators(size_t n) const; // q_0 .. q_n
  // "2,2" finite, "(2)" periodic, "1,2,(3,4)" eventually periodic
  static continued_fraction parse(const std::string& s);
};

struct rotation_estimate {
  rational value;      // ones / n
  rational half_width; // 1/n
  size_t ones = 0, n = 0;
};

// counts lift increments along the orbit of x0
rotation_estimate rotation_number_counting(const map_spec& circle_map, const exact_scalar& x0,
                                           size_t n);

enum class rot_status { exact_hit, no_hit_up_to_depth };

struct rotation_result {
  rot_status status;
  rational alpha_lo, alpha_hi; // equal on an exact hit
  std::optional<size_t> K, S_K; // the paper's index form K/S_K is metadata
  size_t depth = 0;

  bool exact() const { return status == rot_status::exact_hit; }
  rational prime_end_lo() const { return 1 - alpha_hi; }
  rational prime_end_hi() const { return 1 - alpha_lo; }
};

// minimal cutting index K with sigma^{S_K - 1}(nu) strictly between
// 01 nu_3 nu_4 ... and 11 nu_3 nu_4 ...; alpha is the exact 1-frequency of
// the period-S_K block of nu^phi
rotation_result rotation_number_cutting(const symbol_seq& nu, size_t depth);

struct height_result {
  rational lo, hi;
  bool exact;
};

height_result height(const symbol_seq& nu, size_t depth);

std::vector<size_t> ostrowski_cutting_times(const continued_fraction& cf, size_t N);

symbol_seq kneading_from_cutting_times(const std::vector<size_t>& S, size_t N);

// cf encodes the target height; builds nu^phi as the rotational coding of
// frequency alpha = 1 - height and decodes; offset defaults to a search
// over {0, alpha, 1-alpha}
symbol_seq kneading_from_cf_denjoy(const continued_fraction& cf, size_t N,
                                   std::optional<exact_scalar> offset = std::nullopt);

struct slope_interval {
  exact_scalar lo, hi;
};

slope_interval realize_rotation_number(const continued_fraction& target, const rational& tol);

} // namespace lorenz

#endif
