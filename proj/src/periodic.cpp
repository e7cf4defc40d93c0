#include "lorenz/periodic.hpp"

#include <algorithm>

namespace lorenz {

shark_order sharkovsky_compare(unsigned long m, unsigned long n) {
  if (m == n) return shark_order::equal;
  auto split = [](unsigned long v) {
    unsigned a = 0;
    while (v % 2 == 0) {
      v /= 2;
      ++a;
    }
    return std::pair<unsigned, unsigned long>{a, v};
  };
  auto [am, bm] = split(m);
  auto [an, bn] = split(n);
  bool m_pow = bm == 1, n_pow = bn == 1;
  bool m_first;
  if (m_pow && n_pow)
    m_first = am < an;
  else if (m_pow != n_pow)
    m_first = m_pow; // powers of two come first
  else if (am != an)
    m_first = am > an; // higher 2-adic blocks come earlier
  else
    m_first = bm > bn; // odd parts descend toward the end
  return m_first ? shark_order::precedes : shark_order::succeeds;
}

std::vector<size_t> period_report::present() const {
  std::vector<size_t> out;
  for (const auto& [m, ws] : periods)
    if (!ws.empty()) out.push_back(m);
  return out;
}

namespace {

struct lap {
  exact_scalar lo, hi;
  bool clo, chi;
  exact_scalar s, t; // g^m(x) = s x + t on the lap
};

std::vector<lap> initial_laps(const map_spec& g) {
  std::vector<lap> laps;
  for (const auto& p : g.pieces) {
    if (!p.fn.is_affine()) throw error("lap enumeration needs a piecewise-affine map");
    laps.push_back({p.lo, p.hi, p.closed_lo, p.closed_hi, p.fn.c1, p.fn.c0});
  }
  return laps;
}

// interior breakpoints of g (piece joints)
std::vector<exact_scalar> interior_breakpoints(const map_spec& g) {
  std::vector<exact_scalar> b;
  for (size_t i = 0; i + 1 < g.pieces.size(); ++i) b.push_back(g.pieces[i].hi);
  return b;
}

std::vector<lap> compose(const map_spec& g, const std::vector<lap>& laps,
                         const std::vector<exact_scalar>& breaks, size_t budget) {
  std::vector<lap> out;
  for (const auto& L : laps) {
    // subdivide L at preimages of g's breakpoints under x -> s x + t
    std::vector<lap> subs;
    if (L.s.sign() == 0) {
      subs.push_back(L);
    } else {
      std::vector<exact_scalar> cuts;
      exact_scalar vlo = L.s * L.lo + L.t, vhi = L.s * L.hi + L.t;
      const exact_scalar& imin = L.s.sign() > 0 ? vlo : vhi;
      const exact_scalar& imax = L.s.sign() > 0 ? vhi : vlo;
      for (const auto& beta : breaks)
        if (beta > imin && beta < imax) cuts.push_back((beta - L.t) / L.s);
      std::sort(cuts.begin(), cuts.end(), scalar_less{});
      exact_scalar cur_lo = L.lo;
      bool cur_clo = L.clo;
      for (const auto& cut : cuts) {
        // the cut point follows the branch that owns its image point
        exact_scalar img = L.s * cut + L.t;
        const piece& owner = g.piece_at(img);
        bool owner_below = owner.hi.cmp(img) == 0; // image point tops its piece
        bool cut_goes_left = (L.s.sign() > 0) == owner_below;
        subs.push_back({cur_lo, cut, cur_clo, cut_goes_left, L.s, L.t});
        cur_lo = cut;
        cur_clo = !cut_goes_left;
      }
      subs.push_back({cur_lo, L.hi, cur_clo, L.chi, L.s, L.t});
    }
    for (const auto& sub : subs) {
      // locate the g-piece for this sublap by its image midpoint
      exact_scalar mid = (sub.lo + sub.hi) / exact_scalar(2);
      exact_scalar img = sub.s * mid + sub.t;
      const piece& pc = g.piece_at(img);
      out.push_back({sub.lo, sub.hi, sub.clo, sub.chi, pc.fn.c1 * sub.s,
                     pc.fn.c1 * sub.t + pc.fn.c0});
      if (out.size() > budget) throw lap_budget_exceeded("too many laps");
    }
  }
  return out;
}

bool lap_contains(const lap& L, const exact_scalar& x) {
  int cl = x.cmp(L.lo);
  if (cl < 0 || (cl == 0 && !L.clo)) return false;
  int ch = x.cmp(L.hi);
  if (ch > 0 || (ch == 0 && !L.chi)) return false;
  return true;
}

} // namespace

period_report enumerate_periods(const map_spec& g, size_t N, size_t lap_budget) {
  if (N > 16) throw lap_budget_exceeded("period bound limited to N <= 16");
  period_report rep;
  rep.map_id = g.family;
  rep.max_period = N;
  std::vector<exact_scalar> breaks = interior_breakpoints(g);
  std::vector<lap> laps = initial_laps(g);
  for (size_t m = 1; m <= N; ++m) {
    if (m > 1) laps = compose(g, laps, breaks, lap_budget);
    std::vector<period_witness> found;
    for (const auto& L : laps) {
      exact_scalar one(1);
      if (L.s.cmp(one) == 0) {
        if (L.t.sign() == 0) throw error("identity lap: a whole interval is m-periodic");
        continue;
      }
      exact_scalar x = L.t / (one - L.s);
      if (!lap_contains(L, x)) continue;
      if (g.eval_iter(x, static_cast<int>(m)) != x)
        throw error("lap fixed point failed verification");
      bool prime = true;
      for (size_t d = 1; d < m && prime; ++d)
        if (m % d == 0 && g.eval_iter(x, static_cast<int>(d)) == x) prime = false;
      if (!prime) continue;
      found.push_back({x, L.s.sign()});
    }
    if (!found.empty()) rep.periods[m] = std::move(found);
  }
  return rep;
}

forcing_witness forcing_witnesses(const symbol_seq& nu, size_t m) {
  if (m < 2) throw no_admissible_witness("periods below 2 have no forcing witness pair");
  if (m > 20) throw depth_exceeded("witness search limited to m <= 20");
  auto least_period = [](const std::vector<uint8_t>& w) {
    for (size_t d = 1; d < w.size(); ++d) {
      if (w.size() % d != 0) continue;
      bool ok = true;
      for (size_t i = d; i < w.size() && ok; ++i)
        if (w[i] != w[i - d]) ok = false;
      if (ok) return d;
    }
    return w.size();
  };
  std::optional<symbol_seq> best;
  for (unsigned long bits = 0; bits < (1ul << m); ++bits) {
    std::vector<uint8_t> w(m);
    for (size_t i = 0; i < m; ++i) w[i] = (bits >> (m - 1 - i)) & 1;
    if (least_period(w) != m) continue;
    symbol_seq cand = symbol_seq::periodic({}, w);
    if (is_admissible(cand, nu, m + 2) != tristate::yes) continue;
    if (!best || parity_lex_compare(cand, *best, m + 2) == ordering::greater) best = cand;
  }
  if (!best) throw no_admissible_witness("no admissible itinerary of least period m");

  forcing_witness fw;
  fw.m = m;
  fw.e = *best;
  std::vector<uint8_t> wp = best->period;
  wp.back() ^= 1;
  size_t d = least_period(wp);
  std::vector<uint8_t> wp_core(wp.begin(), wp.begin() + static_cast<long>(d));
  fw.e_prime = symbol_seq::periodic({}, wp_core);
  if (is_admissible(fw.e_prime, nu, m + 2) != tristate::yes)
    throw no_admissible_witness("flipped companion is not admissible");
  size_t ones_e = 0;
  for (uint8_t b : best->period) ones_e += b;
  if (ones_e % 2 == 0) throw no_admissible_witness("maximal witness is orientation preserving");
  if (d == m) {
    size_t ones = 0;
    for (uint8_t b : wp) ones += b;
    if (ones % 2 != 0) throw error("flipped witness has odd parity at full period");
    fw.witness_case = forcing_witness::case_t::prime_m_increasing;
  } else if (2 * d == m) {
    size_t ones = 0;
    for (uint8_t b : wp_core) ones += b;
    if (ones % 2 == 0) throw error("half-period witness should reverse orientation");
    fw.witness_case = forcing_witness::case_t::prime_half_decreasing;
  } else {
    throw error("flipped witness has unexpected least period");
  }
  return fw;
}

closure_verdict verify_sharkovsky_closure(const period_report& r, closure_mode mode) {
  auto excepted = [&](size_t m) {
    switch (mode) {
      case closure_mode::unimodal:
        return false;
      case closure_mode::increasing_lorenz:
        return m == 1;
      case closure_mode::decreasing_lorenz:
        return m >= 2 && (m & (m - 1)) == 0; // 2^r, r >= 1
    }
    return false;
  };
  closure_verdict v;
  for (size_t n : r.present()) {
    for (size_t m = 1; m <= r.max_period; ++m) {
      if (m == n || r.has(m) || excepted(m)) continue;
      if (sharkovsky_compare(m, n) == shark_order::precedes) {
        v.pass = false;
        v.violations.emplace_back(n, m);
      }
    }
  }
  return v;
}

type_result classify_type(const period_report& r) {
  size_t max_power = 0;
  unsigned max_exp = 0;
  for (size_t m : r.present()) {
    if ((m & (m - 1)) != 0) return {type_class::beyond, 0};
    if (m > max_power) {
      max_power = m;
      max_exp = 0;
      for (size_t v = m; v > 1; v /= 2) ++max_exp;
    }
  }
  // a power-of-two set that fills the whole window cannot be told apart
  // from type 2^infinity at this depth
  if (max_power == r.max_period) return {type_class::two_infinity_compatible, max_exp};
  return {type_class::power_of_two, max_exp};
}

} // namespace lorenz
