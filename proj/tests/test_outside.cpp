#include <doctest.h>

#include "lorenz/outside.hpp"
#include "lorenz/rotation.hpp"

using namespace lorenz;

TEST_CASE("stunted circle map values") {
  map_spec b16 = stunted_circle_map(exact_scalar(8, 5));
  CHECK(b16.eval(exact_scalar(1, 5)) == exact_scalar(4, 5)); // plateau
  CHECK(b16.wrap(b16.eval(exact_scalar(7, 10))) == exact_scalar(8, 25));
  // both one-sided values at the plateau edge agree
  exact_scalar a = b16.plateau->hi;
  auto [left, ls] = b16.eval_limit(a, -1);
  auto [right, rs] = b16.eval_limit(a, +1);
  CHECK(left == exact_scalar(4, 5));
  CHECK(right == exact_scalar(4, 5));

  map_spec b2 = stunted_circle_map(exact_scalar(2));
  CHECK(b2.wrap(b2.eval(exact_scalar(3, 4))) == exact_scalar(1, 2));

  CHECK_THROWS_AS(stunted_circle_map(exact_scalar(7, 5)), parameter_out_of_range);
}

TEST_CASE("outside map values") {
  map_spec B2 = outside_map(exact_scalar(2));
  CHECK(B2.eval(exact_scalar(2, 5)) == exact_scalar(4, 5));
  CHECK(B2.eval(exact_scalar(3, 2)) == exact_scalar(0));

  map_spec B16 = outside_map(exact_scalar(8, 5));
  CHECK(B16.eval(exact_scalar(5, 4)) == exact_scalar(2, 5)); // plateau edge included
  // continuity at 0 ~ 2: the constant tail meets lambda(x-1)+2 at the seam
  auto [end, es] = B16.eval_limit(exact_scalar(2), -1);
  CHECK(end == exact_scalar(2, 5));
  CHECK(B16.eval(exact_scalar(0)) == exact_scalar(2, 5));
}

TEST_CASE("conjugacy between the stunted and outside maps") {
  // lambda = 2, x = 3/4: both sides land on 1
  map_spec bar = stunted_circle_map(exact_scalar(2));
  map_spec B = outside_map(exact_scalar(2));
  exact_scalar x(3, 4);
  exact_scalar lhs = conjugacy_G(bar.wrap(bar.eval(x)));
  exact_scalar rhs = B.wrap(B.eval(conjugacy_G(x)));
  CHECK(lhs == exact_scalar(1));
  CHECK(rhs == exact_scalar(1));

  std::vector<exact_scalar> samples;
  for (int k = 0; k < 101; ++k) samples.push_back(exact_scalar(k, 101));
  CHECK(check_conjugacy(exact_scalar(8, 5), samples).pass);
  CHECK(check_conjugacy(exact_scalar(19, 10), samples).pass);
}

TEST_CASE("flattening semiconjugacy") {
  CHECK(flatten(exact_scalar(0)) == exact_scalar(0));
  CHECK(flatten(exact_scalar(1, 2)) == exact_scalar(1));

  map_spec bar = stunted_circle_map(exact_scalar(2));
  map_spec core = make_family("tent-core", exact_scalar(2));
  for (const auto& y : {exact_scalar(3, 5), exact_scalar(11, 20)}) {
    exact_scalar lhs = flatten(bar.wrap(bar.eval(y)));
    exact_scalar rhs = core.eval(flatten(y));
    CHECK(lhs == rhs);
  }
  // spelled out: p(phi(0.6)) = p(0.2) = 0.4 = T_2(0.8)
  CHECK(bar.wrap(bar.eval(exact_scalar(3, 5))) == exact_scalar(1, 5));
  CHECK(flatten(exact_scalar(1, 5)) == exact_scalar(2, 5));
  CHECK(core.eval(exact_scalar(4, 5)) == exact_scalar(2, 5));

  // off the open plateau arc the identity is exact for every sample
  for (const exact_scalar lam : {exact_scalar(8, 5), exact_scalar(9, 5)}) {
    map_spec barl = stunted_circle_map(lam);
    map_spec corel = make_family("tent-core", lam);
    exact_scalar a = barl.plateau->hi;
    for (int k = 0; k < 60; ++k) {
      exact_scalar y(k, 60);
      if (y.sign() > 0 && y < a) continue;
      CHECK(flatten(barl.wrap(barl.eval(y))) == corel.eval(flatten(y)));
    }
  }
}

TEST_CASE("accessibility certificates") {
  // constant 0 orbit at the full slope lifts along the fixed point
  map_spec core2 = make_family("tent-core", exact_scalar(2));
  backward_orbit zeros = backward_orbit::make(core2, std::vector<exact_scalar>(7, exact_scalar(0)));
  lift_certificate c0 = accessibility_certificate(zeros, 0);
  CHECK(c0.status == lift_status::certified);
  CHECK(verify_certificate(zeros, c0));
  for (const auto& y : c0.lift) CHECK(y == exact_scalar(0));

  // constant 2/3 has no lift: nothing maps onto 2/3 among its preimages
  backward_orbit tt =
      backward_orbit::make(core2, std::vector<exact_scalar>(4, exact_scalar(2, 3)));
  lift_certificate c1 = accessibility_certificate(tt, 0);
  CHECK(c1.status == lift_status::no_lift);

  // a single point always lifts
  backward_orbit single = backward_orbit::make(core2, {exact_scalar(1, 2)});
  CHECK(accessibility_certificate(single, 0).status == lift_status::certified);

  // golden slope: the three backward orbits inside omega(c) = {0, 1, c}
  exact_scalar lam = exact_scalar::golden();
  map_spec coreg = make_family("tent-core", lam);
  exact_scalar c = (lam - exact_scalar(1)) / lam;
  std::vector<exact_scalar> cycle{exact_scalar(0), exact_scalar(1), c};
  for (size_t start = 0; start < 3; ++start) {
    std::vector<exact_scalar> pts;
    for (size_t i = 0; i <= 12; ++i) pts.push_back(cycle[(start + i) % 3]);
    backward_orbit orb = backward_orbit::make(coreg, pts);
    bool certified = false;
    for (size_t N = 0; N <= 3 && !certified; ++N) {
      lift_certificate cert = accessibility_certificate(orb, N);
      if (cert.status == lift_status::certified) certified = verify_certificate(orb, cert);
    }
    CHECK(certified);
  }

  // malformed orbits are rejected
  CHECK_THROWS_AS(
      backward_orbit::make(core2, {exact_scalar(1, 3), exact_scalar(1, 3)}), error);
}

TEST_CASE("folding point membership") {
  exact_scalar lam = exact_scalar::golden();
  map_spec coreg = make_family("tent-core", lam);
  exact_scalar c = (lam - exact_scalar(1)) / lam;
  std::vector<exact_scalar> omega{exact_scalar(0), exact_scalar(1), c};
  std::vector<exact_scalar> pts;
  for (size_t i = 0; i <= 8; ++i)
    pts.push_back(omega[i % 3]);
  backward_orbit orb = backward_orbit::make(coreg, pts);
  CHECK(folding_depth_check(orb, omega, rational(0)));

  // a generic point is not in the finite omega approximation
  backward_orbit off = backward_orbit::make(coreg, {exact_scalar(3, 5)});
  CHECK(!folding_depth_check(off, omega, rational(0)));

  map_spec core2 = make_family("tent-core", exact_scalar(2));
  backward_orbit z = backward_orbit::make(core2, std::vector<exact_scalar>(5, exact_scalar(0)));
  CHECK(folding_depth_check(z, {exact_scalar(0)}, rational(0)));
}
