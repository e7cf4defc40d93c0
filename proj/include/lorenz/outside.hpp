// The circle maps of the tent-core picture: stunted map, outside map B on
// the doubled circle, the conjugacy G between them, the algebraic
// flattening p(t) = min(2t, 2-2t), finite-depth accessibility certificates
// for backward orbits, and the folding-point membership check.

#ifndef LORENZ_OUTSIDE_HPP
#define LORENZ_OUTSIDE_HPP

#include <optional>
#include <vector>

#include "lorenz/maps.hpp"

namespace lorenz {

// plateau lambda/2 on [0, (lambda-1)/lambda], lambda (x - 1/2) mod 1 elsewhere
map_spec stunted_circle_map(const exact_scalar& lambda);

// lambda (x-1) + 2 mod 2 on [0, 2/lambda), constant 2 - lambda on [2/lambda, 2)
map_spec outside_map(const exact_scalar& lambda);

// G(x) = 2 (1 - x) mod 2, as a point of [0, 2)
exact_scalar conjugacy_G(const exact_scalar& x);

struct conjugacy_report {
  bool pass = true;
  std::vector<exact_scalar> mismatches;
};

// checks G(phi_bar(x)) = B(G(x)) at each sample
conjugacy_report check_conjugacy(const exact_scalar& lambda,
                                 const std::vector<exact_scalar>& samples);

// two-fold flattening of the circle onto [0,1]
exact_scalar flatten(const exact_scalar& y);
std::pair<exact_scalar, exact_scalar> flatten_preimages(const exact_scalar& x);

struct backward_orbit {
  map_spec core;                    // T_lambda
  std::vector<exact_scalar> points; // x_0 .. x_M with T(x_{i+1}) = x_i

  static backward_orbit make(map_spec core, std::vector<exact_scalar> pts);
};

enum class lift_status { certified, no_lift, inconclusive };

struct lift_certificate {
  lift_status status = lift_status::no_lift;
  size_t grace = 0;               // the grace index N
  std::vector<exact_scalar> lift; // y_N .. y_M on success
  size_t nodes_explored = 0;
};

// exhaustive search over the flattening preimages of x_N .. x_M constrained
// by phi_bar(y_{i+1}) = y_i and, for i > N, exclusion from the open plateau
// arc (0, (lambda-1)/lambda)
lift_certificate accessibility_certificate(const backward_orbit& orbit, size_t N);

bool verify_certificate(const backward_orbit& orbit, const lift_certificate& cert);

// every orbit coordinate within eps of the finite approximation of omega(c)
bool folding_depth_check(const backward_orbit& orbit, const std::vector<exact_scalar>& omega,
                         const rational& eps);

} // namespace lorenz

#endif
