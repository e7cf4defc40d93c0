#include "lorenz/outside.hpp"

#include <functional>

namespace lorenz {

namespace {

void check_slope(const exact_scalar& lambda) {
  if (!(lambda > exact_scalar::sqrt_of(2) && lambda <= exact_scalar(2)))
    throw parameter_out_of_range("slope must lie in (sqrt 2, 2]");
}

void assert_lift_continuous(const map_spec& m) {
  exact_scalar circ(m.circumference());
  for (size_t i = 0; i + 1 < m.pieces.size(); ++i) {
    const piece& l = m.pieces[i];
    const piece& r = m.pieces[i + 1];
    exact_scalar lv = l.fn.eval(l.hi) + exact_scalar(l.lift_k) * circ;
    exact_scalar rv = r.fn.eval(r.lo) + exact_scalar(r.lift_k) * circ;
    if (lv != rv) throw error("lift is discontinuous at an interior breakpoint");
  }
  const piece& first = m.pieces.front();
  const piece& last = m.pieces.back();
  exact_scalar at_end = last.fn.eval(last.hi) + exact_scalar(last.lift_k) * circ;
  exact_scalar at_zero = first.fn.eval(first.lo) + exact_scalar(first.lift_k) * circ;
  if (at_end != at_zero + circ) throw error("lift does not close up with degree one");
}

} // namespace

map_spec stunted_circle_map(const exact_scalar& lambda) {
  check_slope(lambda);
  exact_scalar a = (lambda - exact_scalar(1)) / lambda;
  exact_scalar half(1, 2);
  exact_scalar plateau_v = lambda / exact_scalar(2);
  map_spec m;
  m.domain = domain_t::circle1;
  m.family = "stunted-core-tent";
  m.parameter = lambda;
  m.plateau = plateau_info{exact_scalar(0), a, plateau_v};
  m.pieces.push_back({exact_scalar(0), a, true, true, piece_fn::constant(plateau_v), 0});
  if (a < half)
    m.pieces.push_back({a, half, false, true,
                        piece_fn::affine(lambda, exact_scalar(1) - lambda * half), 0});
  m.pieces.push_back({half.cmp(a) > 0 ? half : a, exact_scalar(1), false, false,
                      piece_fn::affine(lambda, -(lambda * half)), 1});
  m.validate();
  assert_lift_continuous(m);
  return m;
}

map_spec outside_map(const exact_scalar& lambda) {
  check_slope(lambda);
  exact_scalar one(1), two(2);
  exact_scalar d2 = two / lambda; // 2/lambda = 2 - d
  map_spec m;
  m.domain = domain_t::circle2;
  m.family = "outside-tent";
  m.parameter = lambda;
  m.plateau = plateau_info{d2, two, two - lambda};
  m.pieces.push_back({exact_scalar(0), one, true, false,
                      piece_fn::affine(lambda, two - lambda), 0});
  if (d2 > one)
    m.pieces.push_back({one, d2, true, false, piece_fn::affine(lambda, -lambda), 1});
  m.pieces.push_back({d2, two, true, false, piece_fn::constant(two - lambda), 1});
  m.validate();
  assert_lift_continuous(m);
  return m;
}

exact_scalar conjugacy_G(const exact_scalar& x) {
  exact_scalar w = x.frac(); // treat x as a point of R/Z
  if (w.sign() == 0) return exact_scalar(0);
  return exact_scalar(2) - exact_scalar(2) * w;
}

conjugacy_report check_conjugacy(const exact_scalar& lambda,
                                 const std::vector<exact_scalar>& samples) {
  map_spec bar = stunted_circle_map(lambda);
  map_spec B = outside_map(lambda);
  conjugacy_report rep;
  for (const auto& x : samples) {
    exact_scalar lhs = conjugacy_G(bar.wrap(bar.eval(bar.wrap(x))));
    exact_scalar rhs = B.wrap(B.eval(B.wrap(conjugacy_G(x))));
    if (lhs != rhs) {
      rep.pass = false;
      rep.mismatches.push_back(x);
    }
  }
  return rep;
}

exact_scalar flatten(const exact_scalar& y) {
  exact_scalar w = y.frac();
  exact_scalar two_w = exact_scalar(2) * w;
  if (w <= exact_scalar(1, 2)) return two_w;
  return exact_scalar(2) - two_w;
}

std::pair<exact_scalar, exact_scalar> flatten_preimages(const exact_scalar& x) {
  exact_scalar half_x = x / exact_scalar(2);
  exact_scalar other = exact_scalar(1) - half_x;
  if (other.cmp(exact_scalar(1)) == 0) other = exact_scalar(0);
  return {half_x, other};
}

backward_orbit backward_orbit::make(map_spec core, std::vector<exact_scalar> pts) {
  if (pts.empty()) throw error("empty backward orbit");
  for (size_t i = 0; i + 1 < pts.size(); ++i)
    if (core.eval(pts[i + 1]) != pts[i])
      throw error("not a backward orbit: T(x_{i+1}) != x_i at i=" + std::to_string(i));
  return {std::move(core), std::move(pts)};
}

lift_certificate accessibility_certificate(const backward_orbit& orbit, size_t N) {
  const size_t M = orbit.points.size() - 1;
  if (N > M) throw error("grace index past the end of the orbit");
  map_spec bar = stunted_circle_map(orbit.core.parameter);
  exact_scalar arc_hi = bar.plateau->hi; // open arc (0, (lambda-1)/lambda)

  lift_certificate cert;
  cert.grace = N;
  std::vector<exact_scalar> ys;
  ys.reserve(M - N + 1);

  auto in_open_arc = [&](const exact_scalar& y) {
    return y.sign() > 0 && y.cmp(arc_hi) < 0;
  };

  // depth-first over the <= 2 flattening preimages of each x_i, i = N..M
  std::function<bool(size_t)> dfs = [&](size_t i) -> bool {
    if (i > M) return true;
    auto [c1, c2] = flatten_preimages(orbit.points[i]);
    std::vector<exact_scalar> cands{c1};
    if (c2 != c1) cands.push_back(c2);
    for (const auto& y : cands) {
      ++cert.nodes_explored;
      if (i > N && in_open_arc(y)) continue;
      if (!ys.empty() && bar.wrap(bar.eval(y)) != ys.back()) continue;
      ys.push_back(y);
      if (dfs(i + 1)) return true;
      ys.pop_back();
    }
    return false;
  };

  try {
    if (dfs(N)) {
      cert.status = lift_status::certified;
      cert.lift = ys;
    } else {
      cert.status = lift_status::no_lift;
    }
  } catch (const precision_exhausted&) {
    cert.status = lift_status::inconclusive;
  }
  return cert;
}

bool verify_certificate(const backward_orbit& orbit, const lift_certificate& cert) {
  if (cert.status != lift_status::certified) return false;
  const size_t M = orbit.points.size() - 1;
  const size_t N = cert.grace;
  if (cert.lift.size() != M - N + 1) return false;
  map_spec bar = stunted_circle_map(orbit.core.parameter);
  exact_scalar arc_hi = bar.plateau->hi;
  for (size_t i = N; i <= M; ++i) {
    const exact_scalar& y = cert.lift[i - N];
    if (flatten(y) != orbit.points[i]) return false;
    if (i > N && y.sign() > 0 && y < arc_hi) return false;
    if (i > N && bar.wrap(bar.eval(y)) != cert.lift[i - N - 1]) return false;
  }
  return true;
}

bool folding_depth_check(const backward_orbit& orbit, const std::vector<exact_scalar>& omega,
                         const rational& eps) {
  exact_scalar tol{eps};
  for (const auto& x : orbit.points) {
    bool near = false;
    for (const auto& w : omega) {
      if ((x - w).abs() <= tol) {
        near = true;
        break;
      }
    }
    if (!near) return false;
  }
  return true;
}

} // namespace lorenz
