#include "lorenz/kneading.hpp"

#include <algorithm>

namespace lorenz {

namespace {

struct sided_point {
  exact_scalar v;
  int side; // -1: v^-, 0: the point v, +1: v^+
};

// order of sided points on the line
int sided_cmp(const sided_point& a, const sided_point& b) {
  int c = a.v.cmp(b.v);
  if (c != 0) return c;
  return (a.side > b.side) - (a.side < b.side);
}

// endpoint vs plain point
bool endpoint_le(const sided_point& e, const exact_scalar& x) {
  int c = e.v.cmp(x);
  return c < 0 || (c == 0 && e.side <= 0);
}
bool endpoint_ge(const sided_point& e, const exact_scalar& x) {
  int c = e.v.cmp(x);
  return c > 0 || (c == 0 && e.side >= 0);
}

sided_point apply(const map_spec& f, const sided_point& p) {
  auto [v, s] = f.eval_limit(p.v, p.side);
  return {v, s};
}

} // namespace

std::vector<tower_level> hofbauer_levels(const map_spec& f, size_t N) {
  if (!f.critical) throw error("map has no declared critical point");
  if (N > 100000) throw depth_exceeded("tower depth too large");
  const exact_scalar c = *f.critical;
  std::vector<tower_level> out;
  if (N == 0) return out;

  sided_point o = apply(f, {c, -1}); // limit critical value orbit, o_1 = (c_1)^-
  const sided_point c1 = o;
  sided_point lo{c, 0}, hi = c1;
  for (size_t n = 1; n <= N; ++n) {
    if (sided_cmp(lo, hi) > 0) std::swap(lo, hi);
    bool cut = endpoint_le(lo, c) && endpoint_ge(hi, c);
    if (n == 1) cut = true; // S_0 = 1 by definition
    out.push_back({n, lo.v, hi.v, cut});
    sided_point next_o = apply(f, o);
    if (cut) {
      lo = next_o;
      hi = c1;
    } else {
      lo = apply(f, lo);
      hi = apply(f, hi);
    }
    o = next_o;
  }
  return out;
}

size_t cutting_data::sup_Q() const {
  size_t s = 0;
  for (size_t k = 1; k < Q.size(); ++k) s = std::max(s, Q[k]);
  return s;
}

cutting_data cutting_data_symbolic(const symbol_seq& nu, size_t depth) {
  if (!nu.has_index(1) || nu.at(1) != 1)
    throw error("kneading sequence must start with 1");
  cutting_data cd;
  cd.depth = depth;
  cd.S.push_back(1);
  while (true) {
    rho_result r = rho(nu, nu, cd.S.back());
    if (r.kind == rho_result::kind_t::infinite) {
      cd.s_terminated = true;
      break;
    }
    if (r.kind == rho_result::kind_t::depth_exceeded || r.value > depth) break;
    cd.S.push_back(r.value);
  }
  // kappa = first 1 after position 1
  size_t kappa_bound = nu.infinite() ? nu.preperiod() + nu.period.size() + 1 : nu.available();
  kappa_bound = std::min(kappa_bound, depth);
  for (size_t j = 2; j <= kappa_bound; ++j) {
    if (nu.at(j) == 1) {
      cd.kappa = j;
      break;
    }
  }
  if (cd.kappa) {
    cd.Shat.push_back(*cd.kappa);
    while (true) {
      rho_result r = rho(nu, nu, cd.Shat.back());
      if (r.kind == rho_result::kind_t::infinite) {
        cd.shat_terminated = true;
        break;
      }
      if (r.kind == rho_result::kind_t::depth_exceeded || r.value > depth) break;
      cd.Shat.push_back(r.value);
    }
  }
  auto q_index = [&](size_t diff) -> size_t {
    auto it = std::lower_bound(cd.S.begin(), cd.S.end(), diff);
    if (it == cd.S.end() || *it != diff)
      throw invalid_cutting_sequence("difference of cutting times is not a cutting time");
    return static_cast<size_t>(it - cd.S.begin());
  };
  cd.Q.assign(cd.S.size(), 0);
  for (size_t k = 1; k < cd.S.size(); ++k) cd.Q[k] = q_index(cd.S[k] - cd.S[k - 1]);
  cd.Qhat.assign(cd.Shat.size(), 0);
  for (size_t k = 1; k < cd.Shat.size(); ++k) cd.Qhat[k] = q_index(cd.Shat[k] - cd.Shat[k - 1]);
  return cd;
}

precritical_ladder closest_precriticals(const map_spec& f, size_t K) {
  if (K > 30) throw depth_exceeded("precritical ladder limited to K <= 30");
  if (!f.critical) throw error("map has no declared critical point");
  for (const auto& p : f.pieces)
    if (!p.fn.is_affine()) throw error("closest precritical points need a piecewise-affine map");
  const exact_scalar c = *f.critical;

  symbol_seq nu = kneading_sequence(f, 4096);
  cutting_data cd = cutting_data_symbolic(nu, 4096);
  if (cd.S.size() <= K) throw depth_exceeded("not enough cutting times within depth");

  precritical_ladder lad;
  const piece& left = f.pieces.front();
  for (size_t k = 0; k <= K; ++k) {
    size_t sk = cd.S[k];
    // branch composition: step 0 through the left piece, step j through the
    // piece named by nu_j; on (zeta_{k-1}, c) the orbit of f(x) follows nu
    // for S_k - 1 symbols
    exact_scalar slope = left.fn.c1, inter = left.fn.c0;
    for (size_t j = 1; j + 1 <= sk; ++j) {
      const piece& pc = nu.at(j) == 0 ? f.pieces.front() : f.pieces.back();
      slope = pc.fn.c1 * slope;
      inter = pc.fn.c1 * inter + pc.fn.c0;
    }
    exact_scalar zeta = (c - inter) / slope;
    if (f.eval_iter(zeta, static_cast<int>(sk)) != c)
      throw error("precritical solve failed verification");
    if (!lad.zetas.empty() && zeta <= lad.zetas.back())
      throw error("precritical ladder is not increasing");
    if (zeta >= c) throw error("precritical point not left of c");
    lad.zetas.push_back(zeta);
    lad.orders.push_back(sk);
  }
  return lad;
}

long_branched_result is_long_branched(const cutting_data& cd, bool nu_eventually_periodic) {
  long_branched_result r{lb_status::unknown, cd.sup_Q(), cd.depth};
  size_t n = cd.Q.size();
  if (!nu_eventually_periodic || n < 6) return r;
  // look for an eventual cycle in Q covering at least two full periods
  for (size_t len = 1; len <= (n - 1) / 3; ++len) {
    for (size_t start = 1; start + 3 * len <= n; ++start) {
      bool ok = true;
      for (size_t i = start; i + len < n && ok; ++i)
        if (cd.Q[i] != cd.Q[i + len]) ok = false;
      if (ok && (n - start) >= 3 * len) {
        r.status = lb_status::yes;
        return r;
      }
    }
    if (r.status == lb_status::yes) break;
  }
  return r;
}

} // namespace lorenz
