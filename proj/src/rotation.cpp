#include "lorenz/rotation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "lorenz/outside.hpp"

namespace lorenz {

long continued_fraction::quotient(size_t i) const {
  if (i == 0) throw error("partial quotients are 1-based");
  size_t idx = i - 1;
  if (idx < a.size()) return a[idx];
  if (!periodic()) throw depth_exceeded("finite continued fraction exhausted");
  size_t plen = a.size() - periodic_from;
  return a[periodic_from + (idx - periodic_from) % plen];
}

exact_scalar continued_fraction::value() const {
  if (a.empty()) throw error("empty continued fraction");
  for (long q : a)
    if (q <= 0) throw error("partial quotients must be positive");
  if (!periodic()) {
    exact_scalar x(a.back());
    for (size_t i = a.size() - 1; i-- > 0;) x = exact_scalar(a[i]) + exact_scalar(1) / x;
    return exact_scalar(1) / x;
  }
  // w = [b1; b2, ..., bp, b1, ...] >= 1 solves C w^2 + (D - A) w - B = 0
  // with (A B; C D) the product of the quotient matrices over one period
  mpz_class A = 1, B = 0, C = 0, D = 1;
  for (size_t i = periodic_from; i < a.size(); ++i) {
    mpz_class b = a[i];
    mpz_class nA = b * A + C, nB = b * B + D;
    C = A;
    D = B;
    A = nA;
    B = nB;
  }
  rational disc = rational((D - A) * (D - A) + 4 * B * C);
  mpz_class pq = disc.get_num() * disc.get_den();
  exact_scalar root = exact_scalar::quadratic(0, rational(1, disc.get_den()), pq);
  exact_scalar w = (exact_scalar(rational(A - D)) + root) / exact_scalar(rational(2 * C));
  exact_scalar x = w;
  for (size_t i = periodic_from; i-- > 0;) x = exact_scalar(a[i]) + exact_scalar(1) / x;
  return exact_scalar(1) / x;
}

std::vector<mpz_class> continued_fraction::denominators(size_t n) const {
  std::vector<mpz_class> q;
  mpz_class qm1 = 0, q0 = 1;
  q.push_back(q0);
  mpz_class prev = qm1, cur = q0;
  for (size_t i = 1; i <= n; ++i) {
    mpz_class next = mpz_class(quotient(i)) * cur + prev;
    prev = cur;
    cur = next;
    q.push_back(cur);
  }
  return q;
}

continued_fraction continued_fraction::parse(const std::string& s) {
  continued_fraction cf;
  std::string tok;
  bool in_period = false;
  auto flush = [&]() {
    if (tok.empty()) return;
    cf.a.push_back(std::stol(tok));
    tok.clear();
  };
  for (char ch : s) {
    if (ch == ',') {
      flush();
    } else if (ch == '(') {
      flush();
      if (in_period) throw error("bad continued fraction: " + s);
      in_period = true;
      cf.periodic_from = cf.a.size();
    } else if (ch == ')') {
      flush();
      if (!in_period) throw error("bad continued fraction: " + s);
      in_period = false;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      tok += ch;
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      throw error("bad continued fraction: " + s);
    }
  }
  flush();
  if (in_period) throw error("unterminated period: " + s);
  if (cf.a.empty()) throw error("empty continued fraction");
  return cf;
}

rotation_estimate rotation_number_counting(const map_spec& m, const exact_scalar& x0, size_t n) {
  if (m.domain == domain_t::interval01)
    throw not_degree_one("rotation counting needs a circle map");
  if (n == 0) throw error("need at least one iterate");
  exact_scalar circ(m.circumference());
  exact_scalar x = m.wrap(x0);
  size_t ones = 0;
  for (size_t k = 0; k < n; ++k) {
    exact_scalar phi = m.eval_lift(x);
    mpz_class inc = (phi / circ).floor();
    if (inc >= 1) ++ones;
    x = phi - circ * exact_scalar(rational(inc));
  }
  rotation_estimate est;
  est.ones = ones;
  est.n = n;
  est.value = rational(static_cast<unsigned long>(ones), static_cast<unsigned long>(n));
  est.value.canonicalize();
  est.half_width = rational(1, static_cast<unsigned long>(n));
  return est;
}

namespace {

// 01 nu_3 nu_4 ... or 11 nu_3 nu_4 ...
symbol_seq band_bound(const symbol_seq& nu, uint8_t first) {
  if (!nu.has_index(2)) throw depth_exceeded("kneading sequence too short for the band");
  if (nu.infinite()) {
    size_t pre = std::max<size_t>(nu.preperiod(), 2);
    std::vector<uint8_t> prefix{first, 1};
    for (size_t k = 3; k <= pre; ++k) prefix.push_back(static_cast<uint8_t>(nu.at(k)));
    // keep the period phase aligned with index pre+1
    size_t p = nu.period.size();
    std::vector<uint8_t> per;
    for (size_t j = 0; j < p; ++j) per.push_back(static_cast<uint8_t>(nu.at(pre + 1 + j)));
    return symbol_seq::periodic(std::move(prefix), std::move(per));
  }
  std::vector<uint8_t> w{first, 1};
  for (size_t k = 3; k <= nu.available(); ++k) w.push_back(static_cast<uint8_t>(nu.at(k)));
  return symbol_seq::finite(std::move(w));
}

} // namespace

rotation_result rotation_number_cutting(const symbol_seq& nu, size_t depth) {
  cutting_data cd = cutting_data_symbolic(nu, depth);
  symbol_seq lower = band_bound(nu, 0);
  symbol_seq upper = band_bound(nu, 1);
  rotation_result res;
  res.depth = depth;
  size_t decided = cd.S.size();
  for (size_t k = 0; k < cd.S.size(); ++k) {
    symbol_seq w = nu.shift(cd.S[k] - 1);
    ordering lo = parity_lex_compare(w, lower, depth);
    ordering hi = parity_lex_compare(w, upper, depth);
    if (lo == ordering::undecided || hi == ordering::undecided) {
      decided = k;
      break;
    }
    if (lo == ordering::greater && hi == ordering::less) {
      symbol_seq nuphi = lorenz_recode(nu, cd.S[k]);
      size_t ones = nuphi.ones_in_prefix(cd.S[k]);
      res.status = rot_status::exact_hit;
      res.alpha_lo = rational(static_cast<unsigned long>(ones),
                              static_cast<unsigned long>(cd.S[k]));
      res.alpha_lo.canonicalize();
      res.alpha_hi = res.alpha_lo;
      res.K = k;
      res.S_K = cd.S[k];
      return res;
    }
  }
  // no hit: bracket alpha by k/S_k over the deeper half of the computed range
  if (decided < 2) throw depth_exceeded("not enough cutting times to bracket alpha");
  res.status = rot_status::no_hit_up_to_depth;
  size_t from = std::max<size_t>(1, decided / 2);
  rational lo_est, hi_est;
  bool first = true;
  for (size_t k = from; k < decided; ++k) {
    rational e(static_cast<unsigned long>(k), static_cast<unsigned long>(cd.S[k]));
    e.canonicalize();
    if (first || e < lo_est) lo_est = e;
    if (first || e > hi_est) hi_est = e;
    first = false;
  }
  res.alpha_lo = lo_est;
  res.alpha_hi = hi_est;
  return res;
}

height_result height(const symbol_seq& nu, size_t depth) {
  rotation_result r = rotation_number_cutting(nu, depth);
  return {rational(1 - r.alpha_hi), rational(1 - r.alpha_lo), r.exact()};
}

std::vector<size_t> ostrowski_cutting_times(const continued_fraction& cf, size_t N) {
  std::set<size_t> s;
  s.insert(1);
  long a1 = cf.quotient(1);
  for (long k = 1; k <= a1; ++k)
    if (static_cast<size_t>(k + 1) <= N) s.insert(static_cast<size_t>(k + 1));
  // a q_n + q_{n-1} for 1 <= a <= a_{n+1}
  mpz_class qprev = 1; // q_0
  mpz_class qcur;
  {
    qcur = cf.quotient(1); // q_1
  }
  for (size_t n = 1;; ++n) {
    if (qprev > static_cast<long>(N)) break;
    long anext;
    try {
      anext = cf.quotient(n + 1);
    } catch (const depth_exceeded&) {
      break;
    }
    bool any = false;
    for (long av = 1; av <= anext; ++av) {
      mpz_class val = av * qcur + qprev;
      if (val <= static_cast<long>(N)) {
        s.insert(val.get_ui());
        any = true;
      }
    }
    mpz_class qnext = anext * qcur + qprev;
    qprev = qcur;
    qcur = qnext;
    if (!any && qprev > static_cast<long>(N)) break;
  }
  return {s.begin(), s.end()};
}

symbol_seq kneading_from_cutting_times(const std::vector<size_t>& S, size_t N) {
  if (S.size() < 2 || S[0] != 1 || S[1] != 2)
    throw invalid_cutting_sequence("cutting times must start 1, 2");
  for (size_t i = 1; i < S.size(); ++i)
    if (S[i] <= S[i - 1]) throw invalid_cutting_sequence("cutting times must increase");
  size_t len = std::min(N, S.back());
  std::vector<uint8_t> nu(len + 1, 0); // 1-based
  nu[1] = 1;
  auto index_of = [&](size_t v) -> size_t {
    auto it = std::lower_bound(S.begin(), S.end(), v);
    if (it == S.end() || *it != v)
      throw invalid_cutting_sequence("difference closure fails");
    return static_cast<size_t>(it - S.begin());
  };
  for (size_t k = 1; k < S.size() && S[k - 1] < len; ++k) {
    size_t q = index_of(S[k] - S[k - 1]);
    size_t sq = S[q];
    for (size_t j = 1; j < sq && S[k - 1] + j <= len; ++j) nu[S[k - 1] + j] = nu[j];
    if (S[k] <= len) nu[S[k]] = static_cast<uint8_t>(1 - nu[sq]);
  }
  return symbol_seq::finite(std::vector<uint8_t>(nu.begin() + 1, nu.end()));
}

namespace {

// nu^phi_k = 1 iff {k alpha + beta} lies in (0, alpha]; the half-open choice
// is the one-sided limit coding of the critical value orbit
std::vector<uint8_t> rotational_coding(const exact_scalar& alpha, const exact_scalar& beta,
                                       size_t N) {
  std::vector<uint8_t> w;
  w.reserve(N);
  exact_scalar t = beta.frac();
  for (size_t k = 1; k <= N; ++k) {
    t = (t + alpha).frac();
    bool one = t.sign() > 0 && t.cmp(alpha) <= 0;
    w.push_back(one);
  }
  return w;
}

bool blocks_0_11(const std::vector<uint8_t>& nu_word) {
  // after nu_1 = 1 the word is a concatenation of blocks "0" and "11";
  // a single trailing 1 may be a truncated block
  size_t i = 1;
  while (i < nu_word.size()) {
    if (nu_word[i] == 0) {
      ++i;
    } else {
      if (i + 1 >= nu_word.size()) return true; // truncated "11"
      if (nu_word[i + 1] != 1) return false;
      i += 2;
    }
  }
  return true;
}

} // namespace

symbol_seq kneading_from_cf_denjoy(const continued_fraction& cf, size_t N,
                                   std::optional<exact_scalar> offset) {
  // heights live in (0, 1/2); a value above 1/2 is read as the rotation
  // number itself, the two determine each other
  exact_scalar v = cf.value();
  exact_scalar alpha;
  if (v > exact_scalar(0) && v < exact_scalar(1, 2))
    alpha = exact_scalar(1) - v;
  else if (v > exact_scalar(1, 2) && v < exact_scalar(1))
    alpha = v;
  else
    throw parameter_out_of_range("height must lie in (0, 1/2) or alpha in (1/2, 1)");
  std::vector<exact_scalar> candidates;
  if (offset)
    candidates.push_back(*offset);
  else {
    candidates.push_back(exact_scalar(0));
    candidates.push_back(alpha);
    candidates.push_back(exact_scalar(1) - alpha);
  }
  for (const auto& beta : candidates) {
    std::vector<uint8_t> nuphi = rotational_coding(alpha, beta, N);
    symbol_seq nu = lorenz_decode(symbol_seq::finite(nuphi));
    std::vector<uint8_t> w = nu.take(N);
    if (!w.empty() && w[0] == 1 && blocks_0_11(w)) return nu;
  }
  throw offset_mismatch("no tested offset produced a block-0/11 kneading sequence");
}

slope_interval realize_rotation_number(const continued_fraction& target, const rational& tol) {
  if (sgn(tol) <= 0) throw target_out_of_range("tolerance must be positive");
  exact_scalar alpha = target.value();
  if (!(alpha > exact_scalar(1, 2) && alpha < exact_scalar(1)))
    throw target_out_of_range("target rotation number must lie in (1/2, 1)");
  exact_scalar tol_s{rational(tol) / 2};
  size_t n = 2000;
  {
    rational inv = 8 / tol;
    if (inv > 2000) n = static_cast<size_t>(mpz_class(inv.get_num() / inv.get_den()).get_ui()) + 1;
    if (n > 200000) n = 200000;
  }
  exact_scalar lo(283, 200), hi(2); // 1.415 > sqrt 2
  auto estimate = [&](const exact_scalar& lam) {
    map_spec bar = stunted_circle_map(lam);
    exact_scalar x0 = bar.plateau->value;
    return rotation_number_counting(bar, x0, n);
  };
  for (int iter = 0; iter < 60; ++iter) {
    exact_scalar mid = (lo + hi) / exact_scalar(2);
    rotation_estimate e = estimate(mid);
    exact_scalar ev{e.value};
    exact_scalar err = (ev - alpha).abs();
    if (err.cmp(tol_s) <= 0) return {lo, hi};
    if (ev < alpha)
      lo = mid;
    else
      hi = mid;
  }
  return {lo, hi};
}

} // namespace lorenz
