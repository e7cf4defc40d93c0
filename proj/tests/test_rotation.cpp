#include <doctest.h>

#include <algorithm>
#include <set>

#include "lorenz/outside.hpp"
#include "lorenz/rotation.hpp"

using namespace lorenz;

namespace {

continued_fraction periodic_cf(std::vector<long> a, size_t from) {
  continued_fraction cf;
  cf.a = std::move(a);
  cf.periodic_from = from;
  return cf;
}

} // namespace

TEST_CASE("continued fraction values") {
  CHECK(periodic_cf({1}, 0).value() ==
        exact_scalar::quadratic(rational(-1, 2), rational(1, 2), 5)); // (sqrt5-1)/2
  CHECK(periodic_cf({2}, 0).value() == exact_scalar::sqrt_of(2) - exact_scalar(1));
  continued_fraction fin;
  fin.a = {2, 2};
  CHECK(fin.value() == exact_scalar(2, 5));
  // [0; 1, 1, (2)] = 2 - sqrt 2
  CHECK(periodic_cf({1, 1, 2}, 2).value() == exact_scalar(2) - exact_scalar::sqrt_of(2));
  auto q = periodic_cf({1}, 0).denominators(5);
  CHECK(q == std::vector<mpz_class>({1, 1, 2, 3, 5, 8}));
  CHECK(continued_fraction::parse("1,1,(2)").value() ==
        exact_scalar(2) - exact_scalar::sqrt_of(2));
}

TEST_CASE("rotation number by counting") {
  // degenerate plateau: everything locks on the fixed point over 0
  map_spec bar2 = stunted_circle_map(exact_scalar(2));
  rotation_estimate e2 = rotation_number_counting(bar2, bar2.plateau->value, 200);
  CHECK(e2.value == 1);

  // golden slope: the critical orbit has period three, alpha = 2/3 exactly
  map_spec barg = stunted_circle_map(exact_scalar::golden());
  rotation_estimate eg = rotation_number_counting(barg, barg.plateau->value, 3000);
  CHECK(eg.value == rational(2, 3));

  // start independence within 2/n
  rotation_estimate a = rotation_number_counting(barg, exact_scalar(1, 3), 1200);
  rotation_estimate b = rotation_number_counting(barg, exact_scalar(2, 5), 1200);
  rational gap = a.value - b.value;
  if (sgn(gap) < 0) gap = -gap;
  CHECK(gap <= rational(2, 1200));

  CHECK_THROWS_AS(
      rotation_number_counting(make_family("tent-symmetric", exact_scalar(2)), exact_scalar(0), 10),
      not_degree_one);
}

TEST_CASE("rotation number by cutting times") {
  // the three-row display, extended with period 14: hit at S_7 = 11
  symbol_seq display = symbol_seq::from_string("(10011011011101)");
  rotation_result rr = rotation_number_cutting(display, 200);
  CHECK(rr.exact());
  REQUIRE(rr.S_K);
  CHECK(*rr.S_K == 11);
  CHECK(*rr.K == 7);
  CHECK(rr.alpha_lo == rational(8, 11)); // ones in the period-11 block of nu^phi
  CHECK(rr.prime_end_lo() == rational(3, 11));

  // golden: no cutting time enters the band, bracket tends to 2/3
  rotation_result rg = rotation_number_cutting(symbol_seq::from_string("(101)"), 3000);
  CHECK(!rg.exact());
  rational tol(1, 1000);
  rational d1 = rg.alpha_lo - rational(2, 3);
  if (sgn(d1) < 0) d1 = -d1;
  rational d2 = rg.alpha_hi - rational(2, 3);
  if (sgn(d2) < 0) d2 = -d2;
  CHECK(d1 <= tol);
  CHECK(d2 <= tol);

  // full tent: bracket tends to 1
  rotation_result rf = rotation_number_cutting(symbol_seq::from_string("1(0)"), 64);
  CHECK(!rf.exact());
  CHECK(rational(1) - rf.alpha_hi <= rational(1, 30));
  CHECK(rational(1) - rf.alpha_lo <= rational(1, 15));
}

TEST_CASE("height") {
  height_result hg = height(symbol_seq::from_string("(101)"), 3000);
  CHECK(!hg.exact);
  rational d = hg.lo - rational(1, 3);
  if (sgn(d) < 0) d = -d;
  CHECK(d <= rational(1, 1000));

  height_result hf = height(symbol_seq::from_string("1(0)"), 64);
  CHECK(hf.lo <= rational(1, 15));

  // Pell height brackets sqrt(2) - 1 within 1e-2 at depth 1000
  symbol_seq nu = kneading_from_cf_denjoy(periodic_cf({2}, 0), 1100);
  height_result hp = height(nu, 1000);
  exact_scalar target = exact_scalar::sqrt_of(2) - exact_scalar(1);
  CHECK((exact_scalar(hp.lo) - target).abs() <= exact_scalar(1, 100));
  CHECK((exact_scalar(hp.hi) - target).abs() <= exact_scalar(1, 100));
}

TEST_CASE("ostrowski cutting times") {
  auto fib = ostrowski_cutting_times(periodic_cf({1}, 0), 21);
  CHECK(fib == std::vector<size_t>({1, 2, 3, 5, 8, 13, 21}));
  auto pell = ostrowski_cutting_times(periodic_cf({2}, 0), 29);
  CHECK(pell == std::vector<size_t>({1, 2, 3, 5, 7, 12, 17, 29}));
  for (const auto& s : {fib, pell}) {
    std::set<size_t> set(s.begin(), s.end());
    for (size_t k = 1; k < s.size(); ++k) CHECK(set.count(s[k] - s[k - 1]) == 1);
  }
  // interpolated values keep Q growing over the computed range
  auto longer = ostrowski_cutting_times(periodic_cf({2}, 0), 1000);
  symbol_seq nu = kneading_from_cutting_times(longer, 1000);
  cutting_data cd = cutting_data_symbolic(nu, 1000);
  CHECK(cd.S == longer);
  CHECK(cd.Q.size() > 12);
  size_t early = *std::max_element(cd.Q.begin() + 1, cd.Q.begin() + 6);
  size_t late = *std::max_element(cd.Q.end() - 5, cd.Q.end());
  CHECK(late > early);
}

TEST_CASE("kneading sequence reconstruction from cutting times") {
  std::vector<size_t> pow2{1, 2, 4, 8, 16, 32};
  symbol_seq nu = kneading_from_cutting_times(pow2, 32);
  CHECK(nu.to_string() == feigenbaum_prefix(32).to_string());

  std::vector<size_t> fib{1, 2, 3, 5, 8};
  symbol_seq nf = kneading_from_cutting_times(fib, 8);
  CHECK(nf.to_string() == "10011101");
  cutting_data cd = cutting_data_symbolic(nf, 8);
  CHECK(cd.S == fib);
  CHECK(is_admissible(nf, nf, 8) != tristate::no);

  std::vector<size_t> all{1, 2, 3, 4, 5, 6, 7, 8};
  CHECK(kneading_from_cutting_times(all, 8).to_string() == "10000000");

  std::vector<size_t> bad{1, 2, 5};
  CHECK_THROWS_AS(kneading_from_cutting_times(bad, 5), invalid_cutting_sequence);
}

TEST_CASE("Denjoy kneading generator") {
  // Pell golden file
  symbol_seq nu = kneading_from_cf_denjoy(periodic_cf({2}, 0), 31);
  std::string s;
  for (uint8_t b : nu.take(31)) s += b ? '1' : '0';
  CHECK(s == "1011110111101111110111101111110");

  cutting_data cd = cutting_data_symbolic(kneading_from_cf_denjoy(periodic_cf({2}, 0), 64), 31);
  CHECK(cd.Shat == std::vector<size_t>({3, 5, 17, 29}));

  // blocks 0/11 for [0; 1, (2, 1)] read as a direct frequency above 1/2
  symbol_seq nd = kneading_from_cf_denjoy(periodic_cf({1, 2}, 0), 200);
  auto w = nd.take(200);
  size_t i = 1;
  while (i < w.size()) {
    if (w[i] == 0) {
      ++i;
    } else {
      if (i + 1 < w.size()) CHECK(w[i + 1] == 1);
      i += 2;
    }
  }
  cutting_data cnd = cutting_data_symbolic(nd, 200);
  CHECK(cnd.sup_Q() <= 1);
}

TEST_CASE("realize a target rotation number") {
  continued_fraction two_thirds;
  two_thirds.a = {1, 2};
  slope_interval si = realize_rotation_number(two_thirds, rational(1, 100));
  exact_scalar g = exact_scalar::golden();
  CHECK(si.lo <= g);
  CHECK(g <= si.hi);

  continued_fraction pell_alpha = continued_fraction::parse("1,1,(2)"); // 2 - sqrt 2
  slope_interval sp = realize_rotation_number(pell_alpha, rational(1, 100));
  exact_scalar mid = (sp.lo + sp.hi) / exact_scalar(2);
  map_spec bar = stunted_circle_map(mid);
  rotation_estimate est = rotation_number_counting(bar, bar.plateau->value, 4000);
  exact_scalar err = (exact_scalar(est.value) - pell_alpha.value()).abs();
  CHECK(err <= exact_scalar(1, 100));

  continued_fraction low;
  low.a = {2, 2}; // 0.4
  CHECK_THROWS_AS(realize_rotation_number(low, rational(1, 100)), target_out_of_range);
}
