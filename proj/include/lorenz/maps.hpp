// Piecewise-monotone interval and circle maps with exact coefficients:
// map families (symmetric tent, core tent, logistic), the increasing and
// decreasing symmetric Lorenz maps derived from a unimodal map, the stunted
// circle map and degree-one lifts.
//
// A circle map is stored as its lift restricted to one fundamental domain:
// each piece carries the interval-map value plus an integer lift offset.

#ifndef LORENZ_MAPS_HPP
#define LORENZ_MAPS_HPP

#include <optional>
#include <string>
#include <vector>

#include "lorenz/exact.hpp"

namespace lorenz {

enum class domain_t { interval01, circle1, circle2 };

// value(x) = c2 x^2 + c1 x + c0
struct piece_fn {
  exact_scalar c2, c1, c0;

  static piece_fn affine(exact_scalar slope, exact_scalar intercept) {
    return {exact_scalar(0), std::move(slope), std::move(intercept)};
  }
  static piece_fn constant(exact_scalar v) {
    return {exact_scalar(0), exact_scalar(0), std::move(v)};
  }
  bool is_affine() const { return c2.is_rational() && sgn(c2.rat()) == 0; }
  bool is_constant() const {
    return is_affine() && c1.is_rational() && sgn(c1.rat()) == 0;
  }
  exact_scalar eval(const exact_scalar& x) const;
  int slope_sign_at(const exact_scalar& x) const; // sign of 2 c2 x + c1
};

struct piece {
  exact_scalar lo, hi;
  bool closed_lo = true, closed_hi = false;
  piece_fn fn;
  int lift_k = 0;

  bool contains(const exact_scalar& x) const;
};

struct plateau_info {
  exact_scalar lo, hi, value;
};

struct map_spec {
  domain_t domain = domain_t::interval01;
  std::vector<piece> pieces; // ordered, partition the domain
  std::optional<plateau_info> plateau;
  std::string family;
  exact_scalar parameter;
  std::optional<exact_scalar> critical; // critical or discontinuity point
  bool symmetric = false;

  int circumference() const { return domain == domain_t::circle2 ? 2 : 1; }

  const piece& piece_at(const exact_scalar& x) const;
  exact_scalar eval(const exact_scalar& x) const; // interval-map value, no wrap
  exact_scalar eval_iter(const exact_scalar& x, int n) const;

  // lift value Phi(x); for x an exact positive multiple of the circumference
  // the right end of the fundamental domain is used when the piece list is
  // closed there, so Phi(1) continues the left branch limit
  exact_scalar eval_lift(const exact_scalar& x) const;
  exact_scalar wrap(const exact_scalar& x) const; // into [0, circumference)

  // one-sided evaluation: (x, side) -> (value, side), side in {-1,0,+1};
  // side 0 at a breakpoint of a discontinuous map is the caller's problem
  std::pair<exact_scalar, int> eval_limit(const exact_scalar& x, int side) const;

  void validate() const; // pieces ordered, adjacent, sides consistent
};

struct critical_data {
  exact_scalar c, a, b;
  bool plateau_degenerate = false;
};

// families: "tent-symmetric" (1 - lambda|x - 1/2|), "tent-core" (T_lambda),
// "logistic" (1 - a (x - 1/2)^2)
map_spec make_family(const std::string& family, const exact_scalar& parameter);

map_spec derive_increasing_lorenz(const map_spec& f); // phi
map_spec derive_decreasing_lorenz(const map_spec& f); // psi

// a < c with phi(a) = phi(1), b > c with phi(b) = a
critical_data compute_critical_data(const map_spec& phi);
map_spec stunt(const map_spec& phi, const critical_data& crit);
map_spec stunt(const map_spec& phi);

// checks the translation structure and returns the lift representation;
// rejects plain interval maps
map_spec lift_of(const map_spec& m);

// solve fn(x) = y on a piece, picking the root inside [lo, hi]; affine
// pieces solve exactly, quadratic pieces produce quadratic scalars
exact_scalar solve_on_piece(const piece& p, const exact_scalar& y);

} // namespace lorenz

#endif
