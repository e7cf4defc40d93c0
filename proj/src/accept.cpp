#include "lorenz/accept.hpp"

#include <chrono>
#include <functional>
#include <set>
#include <sstream>

#include "lorenz/kneading.hpp"
#include "lorenz/maps.hpp"
#include "lorenz/outside.hpp"
#include "lorenz/periodic.hpp"
#include "lorenz/rotation.hpp"
#include "lorenz/sturmian.hpp"
#include "lorenz/symbolic.hpp"

namespace lorenz {

namespace {

struct checker {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << "FAILED: " << what << "; ";
    }
  }
  void note(const std::string& s) { detail << s << "; "; }
};

// the three-row display: nu, theta, nu^phi
const std::string display_nu = "10011011011101";

std::vector<rational> lambda_grid_25() {
  // 25 rationals in (1.05, 2]: 53/50 + i * 47/1200
  std::vector<rational> g;
  for (int i = 0; i < 25; ++i) {
    rational v = rational(53, 50) + rational(47 * i, 1200);
    v.canonicalize();
    g.push_back(v);
  }
  return g;
}

std::vector<rational> lambda_grid_rotation() {
  // 24 rationals in (sqrt 2, 2): 71/50 + i * 29/1200
  std::vector<rational> g;
  for (int i = 0; i < 24; ++i) {
    rational v = rational(71, 50) + rational(29 * i, 1200);
    v.canonicalize();
    g.push_back(v);
  }
  return g;
}

std::vector<rational> lambda_grid_15() {
  std::vector<rational> g{rational(53, 50), rational(11, 10), rational(23, 20),
                          rational(6, 5),   rational(5, 4),   rational(13, 10),
                          rational(27, 20), rational(7, 5),   rational(29, 20),
                          rational(3, 2),   rational(31, 20), rational(8, 5),
                          rational(17, 10), rational(9, 5),   rational(19, 10)};
  for (auto& v : g) v.canonicalize();
  return g;
}

std::string word_str(const std::vector<uint8_t>& w) {
  std::string s;
  for (uint8_t b : w) s += b ? '1' : '0';
  return s;
}

// --- criterion 1: theta table ------------------------------------------

void crit_theta_table(checker& c) {
  symbol_seq nu = symbol_seq::from_string(display_nu);
  theta_seq th = theta_signs(nu, 14);
  const std::vector<int> want_theta{1,  -1, -1, -1, 1, -1, -1, 1,
                                    -1, -1, 1,  -1, 1, 1,  -1};
  c.require(th.signs == want_theta, "theta row mismatch");
  symbol_seq nuphi = lorenz_recode(nu, 14);
  c.require(word_str(nuphi.take(14)) == "11101101101001", "nu^phi row mismatch");
  cutting_data cd = cutting_data_symbolic(nu, 14);
  std::vector<size_t> head(cd.S.begin(), cd.S.begin() + std::min<size_t>(8, cd.S.size()));
  c.require(head == std::vector<size_t>({1, 2, 3, 5, 6, 8, 9, 11}),
            "printed cutting times mismatch");
}

// --- criterion 2: Feigenbaum -------------------------------------------

void crit_feigenbaum(checker& c) {
  // the printed prefix, by display segment
  const std::string printed = std::string("1") + "0" + "11" + "1010" + "10111011" +
                              "1011101010111010" + "1011101010111011101110101";
  symbol_seq f64 = feigenbaum_prefix(64);
  c.require(word_str(f64.take(printed.size())) == printed, "printed prefix mismatch");
  cutting_data cd = cutting_data_symbolic(f64, 64);
  c.require(cd.S == std::vector<size_t>({1, 2, 4, 8, 16, 32, 64}), "cutting times not 2^k");
  bool qok = true;
  for (size_t k = 1; k < cd.Q.size(); ++k)
    if (cd.Q[k] != k - 1) qok = false;
  c.require(qok, "Q(k) != k-1");
}

// --- criterion 3: Pell golden file -------------------------------------

void crit_pell(checker& c) {
  const std::string pell31 = "1011110111101111110111101111110";
  continued_fraction cf;
  cf.a = {2};
  cf.periodic_from = 0;
  symbol_seq nu = kneading_from_cf_denjoy(cf, 31);
  c.require(word_str(nu.take(31)) == pell31, "31-symbol display mismatch");
  symbol_seq nu_long = kneading_from_cf_denjoy(cf, 64);
  cutting_data cd = cutting_data_symbolic(nu_long, 31);
  c.require(cd.sup_Q() == 1, "sup Q != 1");
  std::set<size_t> shat(cd.Shat.begin(), cd.Shat.end());
  for (size_t v : {3, 5, 17, 29})
    c.require(shat.count(v) == 1, "co-cutting time " + std::to_string(v) + " missing");
}

// --- criterion 4: Hofbauer vs symbolic ---------------------------------

void crit_tower_oracle(checker& c) {
  for (const rational& lam : lambda_grid_25()) {
    map_spec f = make_family("tent-symmetric", exact_scalar(lam));
    auto levels = hofbauer_levels(f, 200);
    std::set<size_t> numeric;
    for (const auto& lv : levels)
      if (lv.is_cutting) numeric.insert(lv.n);
    symbol_seq nu = kneading_sequence(f, 450);
    cutting_data cd = cutting_data_symbolic(nu, 200);
    std::set<size_t> symbolic(cd.S.begin(), cd.S.end());
    if (numeric != symbolic) {
      c.require(false, "cutting sets differ at lambda = " + rational_str(lam));
      return;
    }
  }
  c.note("25 slopes, N = 200");
}

// --- criteria 5 and 6: Sharkovsky sweeps -------------------------------

void crit_sharkovsky_phi(checker& c) {
  for (const rational& lam : lambda_grid_15()) {
    map_spec f = make_family("tent-symmetric", exact_scalar(lam));
    map_spec phi = derive_increasing_lorenz(f);
    period_report rep = enumerate_periods(phi, 8);
    closure_verdict v = verify_sharkovsky_closure(rep, closure_mode::increasing_lorenz);
    c.require(v.pass, "closure fails at lambda = " + rational_str(lam));
    c.require(!rep.has(1), "phi has a fixed point at lambda = " + rational_str(lam));
  }
  map_spec f2 = make_family("tent-symmetric", exact_scalar(2));
  map_spec phi2 = derive_increasing_lorenz(f2);
  period_report rep2 = enumerate_periods(phi2, 8);
  c.require(rep2.has(1), "full-slope phi should have a fixed point");
}

void crit_sharkovsky_psi(checker& c) {
  for (const rational& lam : lambda_grid_15()) {
    map_spec f = make_family("tent-symmetric", exact_scalar(lam));
    map_spec psi = derive_decreasing_lorenz(f);
    period_report rep = enumerate_periods(psi, 8);
    closure_verdict v = verify_sharkovsky_closure(rep, closure_mode::decreasing_lorenz);
    c.require(v.pass, "closure fails at lambda = " + rational_str(lam));
    c.require(rep.has(1), "psi lost its fixed point at lambda = " + rational_str(lam));
  }
  map_spec f = make_family("tent-symmetric", exact_scalar(9, 5));
  map_spec psi = derive_decreasing_lorenz(f);
  period_report rep = enumerate_periods(psi, 4);
  c.require(rep.has(1) && rep.has(3) && rep.has(4), "psi(9/5) should have periods 1,3,4");
  c.require(!rep.has(2), "psi(9/5) should have no period 2");
}

// --- rotation sweep shared by criteria 7 and 8 --------------------------

struct rotation_sample {
  rational lambda;
  rational alpha;           // exact, from the cutting route
  rotation_estimate count;  // n = 10^4
};

std::vector<rotation_sample> locked_samples() {
  static std::vector<rotation_sample> cache;
  static bool done = false;
  if (done) return cache;
  for (const rational& lam : lambda_grid_rotation()) {
    if (cache.size() >= 10) break;
    map_spec f = make_family("tent-symmetric", exact_scalar(lam));
    symbol_seq nu = kneading_sequence(f, 600);
    rotation_result rr;
    try {
      rr = rotation_number_cutting(nu, 256);
    } catch (const depth_exceeded&) {
      continue;
    }
    if (!rr.exact()) continue;
    map_spec bar = stunted_circle_map(exact_scalar(lam));
    rotation_sample s;
    s.lambda = lam;
    s.alpha = rr.alpha_lo;
    s.count = rotation_number_counting(bar, bar.plateau->value, 10000);
    cache.push_back(std::move(s));
  }
  done = true;
  return cache;
}

void crit_rotation_agreement(checker& c) {
  auto samples = locked_samples();
  c.require(samples.size() >= 10, "fewer than 10 exact-hit slopes in the grid");
  rational tol(2, 10000);
  for (const auto& s : samples) {
    rational err = s.count.value - s.alpha;
    if (sgn(err) < 0) err = -err;
    c.require(err <= tol, "counting vs cutting gap at lambda = " + rational_str(s.lambda));
  }
  // golden slope: bracket converges to 2/3, prime end to 1/3
  map_spec f = make_family("tent-symmetric", exact_scalar::golden());
  symbol_seq nu = kneading_sequence(f, 64);
  c.require(nu.infinite() && nu.to_string() == "(101)", "golden kneading is not (101)");
  rotation_result rr = rotation_number_cutting(nu, 4000);
  c.require(!rr.exact(), "golden slope should not lock");
  rational tol3(1, 1000);
  auto near = [&](const rational& v, const rational& target) {
    rational d = v - target;
    if (sgn(d) < 0) d = -d;
    return d <= tol3;
  };
  c.require(near(rr.alpha_lo, rational(2, 3)) && near(rr.alpha_hi, rational(2, 3)),
            "golden bracket not within 1e-3 of 2/3");
  c.require(near(rr.prime_end_lo(), rational(1, 3)) && near(rr.prime_end_hi(), rational(1, 3)),
            "golden prime end not within 1e-3 of 1/3");
}

void crit_height(checker& c) {
  auto samples = locked_samples();
  c.require(samples.size() >= 10, "fewer than 10 exact-hit slopes in the grid");
  rational tol(2, 10000);
  for (const auto& s : samples) {
    map_spec f = make_family("tent-symmetric", exact_scalar(s.lambda));
    symbol_seq nu = kneading_sequence(f, 600);
    height_result h = height(nu, 256);
    c.require(h.exact, "height not exact at lambda = " + rational_str(s.lambda));
    rational gap = h.lo - (1 - s.count.value);
    if (sgn(gap) < 0) gap = -gap;
    c.require(gap <= tol, "height vs 1 - counting at lambda = " + rational_str(s.lambda));
  }
  // Pell: height brackets sqrt(2) - 1 within 1e-2
  continued_fraction cf;
  cf.a = {2};
  cf.periodic_from = 0;
  symbol_seq nu = kneading_from_cf_denjoy(cf, 700);
  height_result h = height(nu, 650);
  c.require(!h.exact, "Denjoy kneading should not lock");
  exact_scalar target = exact_scalar::sqrt_of(2) - exact_scalar(1);
  exact_scalar tol2(1, 100);
  c.require((exact_scalar(h.lo) - target).abs() <= tol2 &&
                (exact_scalar(h.hi) - target).abs() <= tol2,
            "Pell height bracket not within 1e-2 of sqrt(2)-1");
}

// --- criterion 9: Sturmian proxies --------------------------------------

void crit_sturmian(checker& c) {
  continued_fraction golden_cf;
  golden_cf.a = {1};
  golden_cf.periodic_from = 0;
  auto S = ostrowski_cutting_times(golden_cf, 13);
  c.require(S == std::vector<size_t>({1, 2, 3, 5, 8, 13}), "golden Ostrowski cutting times");

  std::vector<exact_scalar> alphas{
      exact_scalar::quadratic(rational(-1, 2), rational(1, 2), 5), // (sqrt5-1)/2
      exact_scalar::sqrt_of(2) - exact_scalar(1),
      exact_scalar::sqrt_of(3) - exact_scalar(1),
      exact_scalar::quadratic(rational(-1, 2), rational(1, 2), 7), // (sqrt7-1)/2
      exact_scalar::quadratic(rational(-3, 2), rational(1, 2), 13)};
  for (const auto& a : alphas) {
    rotational_word w = rotational_sequence(a, exact_scalar(0), 1000);
    c.require(!w.boundary_hit, "irrational rotation hit the seam");
    c.require(is_balanced(w.word, 20), "rotational word not balanced");
  }

  continued_fraction pell;
  pell.a = {2};
  pell.periodic_from = 0;
  symbol_seq nu = kneading_from_cf_denjoy(pell, 400);
  symbol_seq nuphi = lorenz_recode(nu, 400);
  auto p = factor_complexity(symbol_seq::finite(nuphi.take(400)), 10);
  bool ok = true;
  for (size_t l = 1; l <= 10; ++l)
    if (p[l - 1] != l + 1) ok = false;
  c.require(ok, "Denjoy nu^phi complexity is not l+1");
}

// --- criterion 10: forcing witnesses ------------------------------------

void crit_forcing(checker& c) {
  symbol_seq nu = symbol_seq::from_string("1(0)");
  for (size_t m = 2; m <= 8; ++m) {
    forcing_witness fw = forcing_witnesses(nu, m);
    size_t ones = 0;
    for (uint8_t b : fw.e.period) ones += b;
    c.require(ones % 2 == 1, "maximal witness not orientation reversing at m = " +
                                 std::to_string(m));
    c.require(is_admissible(fw.e, nu, 2 * m) == tristate::yes, "e not admissible");
    c.require(is_admissible(fw.e_prime, nu, 2 * m) == tristate::yes, "e' not admissible");
    if (m == 2)
      c.require(fw.witness_case == forcing_witness::case_t::prime_half_decreasing,
                "m = 2 should land in the m/2 branch");
  }
  forcing_witness f3 = forcing_witnesses(nu, 3);
  c.require(f3.e.to_string() == "(100)" && f3.e_prime.to_string() == "(101)",
            "m = 3 witness pair mismatch");
  forcing_witness f2 = forcing_witnesses(nu, 2);
  c.require(f2.e.to_string() == "(10)" && f2.e_prime.to_string() == "(1)",
            "m = 2 witness pair mismatch");
  bool threw = false;
  try {
    forcing_witnesses(nu, 1);
  } catch (const no_admissible_witness&) {
    threw = true;
  }
  c.require(threw, "m = 1 should be refused");
}

// --- criterion 11: outside-map identities --------------------------------

void crit_outside(checker& c) {
  auto samples_for = [](int denom) {
    std::vector<exact_scalar> xs;
    for (int k = 0; k < denom; ++k) xs.push_back(exact_scalar(k, denom));
    return xs;
  };
  auto lams = locked_samples();
  c.require(lams.size() >= 10, "fewer than 10 slopes");
  std::vector<exact_scalar> xs = samples_for(101); // 100 interior rational samples + 0
  for (const auto& s : lams) {
    exact_scalar lam(s.lambda);
    conjugacy_report rep = check_conjugacy(lam, xs);
    c.require(rep.pass, "G conjugacy fails at lambda = " + rational_str(s.lambda));
    map_spec bar = stunted_circle_map(lam);
    map_spec core = make_family("tent-core", lam);
    exact_scalar a = bar.plateau->hi;
    for (const auto& y : xs) {
      bool interior = y.sign() > 0 && y.cmp(a) < 0;
      if (interior) continue;
      exact_scalar lhs = flatten(bar.wrap(bar.eval(y)));
      exact_scalar rhs = core.eval(flatten(y));
      if (lhs != rhs) {
        c.require(false, "flattening semiconjugacy fails at lambda = " + rational_str(s.lambda));
        break;
      }
    }
  }
  rational tol(4, 10000);
  for (size_t i = 0; i < 10; ++i) {
    exact_scalar lam(lams[i].lambda);
    map_spec bar = stunted_circle_map(lam);
    map_spec B = outside_map(lam);
    rotation_estimate ea = rotation_number_counting(bar, bar.plateau->value, 10000);
    rotation_estimate eb = rotation_number_counting(B, B.plateau->value, 10000);
    rational sum = ea.value + eb.value - 1;
    if (sgn(sum) < 0) sum = -sum;
    c.require(sum <= tol, "rotation numbers of phi-bar and B do not sum to 1 at lambda = " +
                              rational_str(lams[i].lambda));
  }
}

// --- criterion 12: accessibility certificates ----------------------------

void crit_access(checker& c) {
  {
    map_spec core = make_family("tent-core", exact_scalar(2));
    std::vector<exact_scalar> zeros(7, exact_scalar(0));
    backward_orbit orb = backward_orbit::make(core, zeros);
    lift_certificate cert = accessibility_certificate(orb, 0);
    c.require(cert.status == lift_status::certified, "constant-0 orbit should lift");
    c.require(verify_certificate(orb, cert), "certificate failed re-verification");
  }
  {
    map_spec core = make_family("tent-core", exact_scalar(2));
    std::vector<exact_scalar> tt(4, exact_scalar(2, 3));
    backward_orbit orb = backward_orbit::make(core, tt);
    lift_certificate cert = accessibility_certificate(orb, 0);
    c.require(cert.status == lift_status::no_lift, "constant-2/3 orbit should have no lift");
    lift_certificate again = accessibility_certificate(orb, 0);
    c.require(again.status == lift_status::no_lift, "NoLift not stable on re-run");
  }
  {
    exact_scalar lam = exact_scalar::golden();
    map_spec core = make_family("tent-core", lam);
    exact_scalar cpt = (lam - exact_scalar(1)) / lam;
    std::vector<exact_scalar> cycle{exact_scalar(0), exact_scalar(1), cpt};
    for (size_t start = 0; start < 3; ++start) {
      std::vector<exact_scalar> pts;
      for (size_t i = 0; i <= 12; ++i) pts.push_back(cycle[(start + i) % 3]);
      backward_orbit orb = backward_orbit::make(core, pts);
      bool found = false;
      for (size_t N = 0; N <= 3 && !found; ++N) {
        lift_certificate cert = accessibility_certificate(orb, N);
        if (cert.status == lift_status::certified) {
          found = verify_certificate(orb, cert);
        }
      }
      c.require(found, "golden folding orbit " + std::to_string(start) + " should lift");
    }
  }
}

} // namespace

std::vector<criterion_result> run_acceptance(const std::string& suite) {
  struct entry {
    int id;
    const char* name;
    std::function<void(checker&)> fn;
  };
  const std::vector<entry> entries{
      {1, "theta-table reproduction", crit_theta_table},
      {2, "Feigenbaum prefix and cutting times", crit_feigenbaum},
      {3, "Pell golden file", crit_pell},
      {4, "Hofbauer vs symbolic cutting sets", crit_tower_oracle},
      {5, "Sharkovsky closure for phi", crit_sharkovsky_phi},
      {6, "Sharkovsky closure for psi", crit_sharkovsky_psi},
      {7, "rotation number agreement", crit_rotation_agreement},
      {8, "height consistency", crit_height},
      {9, "Sturmian proxies", crit_sturmian},
      {10, "forcing witnesses", crit_forcing},
      {11, "outside-map identities", crit_outside},
      {12, "accessibility certificates", crit_access},
  };
  std::vector<criterion_result> out;
  for (const auto& e : entries) {
    if (suite == "paper-tables" && e.id > 3) continue;
    checker c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      e.fn(c);
    } catch (const std::exception& ex) {
      c.ok = false;
      c.detail << "exception: " << ex.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    out.push_back({e.id, e.name, c.ok, c.detail.str(), ms});
  }
  return out;
}

} // namespace lorenz
