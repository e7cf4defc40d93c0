#include <doctest.h>

#include <set>

#include "lorenz/kneading.hpp"
#include "lorenz/rotation.hpp"

using namespace lorenz;

namespace {

std::set<size_t> cutting_set(const std::vector<tower_level>& levels) {
  std::set<size_t> s;
  for (const auto& lv : levels)
    if (lv.is_cutting) s.insert(lv.n);
  return s;
}

} // namespace

TEST_CASE("hofbauer tower for the full tent") {
  map_spec f = make_family("tent-symmetric", exact_scalar(2));
  auto levels = hofbauer_levels(f, 20);
  CHECK(levels[0].lo == exact_scalar(1, 2));
  CHECK(levels[0].hi == exact_scalar(1));
  CHECK(levels[1].lo == exact_scalar(0));
  CHECK(levels[1].hi == exact_scalar(1));
  for (const auto& lv : levels) CHECK(lv.is_cutting);
}

TEST_CASE("hofbauer tower at the golden slope follows the one-sided limits") {
  map_spec f = make_family("tent-symmetric", exact_scalar::golden());
  auto levels = hofbauer_levels(f, 11);
  CHECK(cutting_set(levels) == std::set<size_t>({1, 2, 4, 5, 7, 8, 10, 11}));
}

TEST_CASE("numeric and symbolic cutting sets agree for rational slopes") {
  for (const exact_scalar lam :
       {exact_scalar(9, 5), exact_scalar(3, 2), exact_scalar(27, 20), exact_scalar(7, 4)}) {
    map_spec f = make_family("tent-symmetric", lam);
    auto levels = hofbauer_levels(f, 60);
    symbol_seq nu = kneading_sequence(f, 140);
    cutting_data cd = cutting_data_symbolic(nu, 60);
    std::set<size_t> sym(cd.S.begin(), cd.S.end());
    CHECK(cutting_set(levels) == sym);
  }
}

TEST_CASE("symbolic cutting data") {
  // Feigenbaum: powers of two, Q(k) = k-1
  cutting_data cd = cutting_data_symbolic(feigenbaum_prefix(32), 32);
  CHECK(cd.S == std::vector<size_t>({1, 2, 4, 8, 16, 32}));
  for (size_t k = 1; k < cd.Q.size(); ++k) CHECK(cd.Q[k] == k - 1);

  // full tent: S_k = k + 1, Q = 0, no co-cutting times
  cutting_data full = cutting_data_symbolic(symbol_seq::from_string("1(0)"), 12);
  CHECK(full.S == std::vector<size_t>({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}));
  CHECK(full.sup_Q() == 0);
  CHECK(!full.kappa);
  CHECK(full.Shat.empty());

  // the Pell display: S, co-cutting times and sup Q
  symbol_seq pell = symbol_seq::from_string("1011110111101111110111101111110");
  cutting_data pd = cutting_data_symbolic(pell, 31);
  std::vector<size_t> head(pd.S.begin(), pd.S.begin() + 8);
  CHECK(head == std::vector<size_t>({1, 2, 4, 6, 7, 9, 11, 12}));
  CHECK(pd.kappa);
  CHECK(*pd.kappa == 3);
  CHECK(pd.Shat == std::vector<size_t>({3, 5, 17, 29}));
  CHECK(pd.sup_Q() == 1);

  // golden: co-cutting sequence terminates provably
  cutting_data gd = cutting_data_symbolic(symbol_seq::from_string("(101)"), 64);
  CHECK(gd.kappa);
  CHECK(*gd.kappa == 3);
  CHECK(gd.Shat == std::vector<size_t>({3}));
  CHECK(gd.shat_terminated);
}

TEST_CASE("difference closure and disjointness hold on kneading data") {
  for (const exact_scalar lam : {exact_scalar(9, 5), exact_scalar(7, 4), exact_scalar(2)}) {
    map_spec f = make_family("tent-symmetric", lam);
    symbol_seq nu = kneading_sequence(f, 220);
    cutting_data cd = cutting_data_symbolic(nu, 100);
    std::set<size_t> s(cd.S.begin(), cd.S.end());
    for (size_t k = 1; k < cd.S.size(); ++k)
      CHECK(s.count(cd.S[k] - cd.S[k - 1]) == 1);
    for (size_t v : cd.Shat) CHECK(s.count(v) == 0);
  }
}

TEST_CASE("closest precritical points") {
  map_spec f2 = make_family("tent-symmetric", exact_scalar(2));
  precritical_ladder lad = closest_precriticals(f2, 2);
  REQUIRE(lad.zetas.size() == 3);
  CHECK(lad.zetas[0] == exact_scalar(1, 4));
  CHECK(lad.zetas[1] == exact_scalar(3, 8));
  CHECK(lad.zetas[2] == exact_scalar(7, 16));
  CHECK(lad.orders == std::vector<size_t>({1, 2, 3}));

  map_spec f = make_family("tent-symmetric", exact_scalar(9, 5));
  precritical_ladder l8 = closest_precriticals(f, 8);
  exact_scalar c = *f.critical;
  for (size_t k = 0; k + 1 < l8.zetas.size(); ++k) {
    CHECK(l8.zetas[k] < l8.zetas[k + 1]);
    CHECK(l8.zetas[k + 1] < c);
  }
  for (size_t k = 0; k < l8.zetas.size(); ++k)
    CHECK(f.eval_iter(l8.zetas[k], static_cast<int>(l8.orders[k])) == c);
}

TEST_CASE("membership of c_{S_{k-1}} in Upsilon_{Q(k)}") {
  map_spec f = make_family("tent-symmetric", exact_scalar(9, 5));
  symbol_seq nu = kneading_sequence(f, 64);
  cutting_data cd = cutting_data_symbolic(nu, 40);
  precritical_ladder lad = closest_precriticals(f, 10);
  exact_scalar one(1);
  for (size_t k = 1; k <= 6; ++k) {
    exact_scalar cs = f.eval_iter(*f.critical, static_cast<int>(cd.S[k - 1]));
    size_t qk = cd.Q[k];
    if (qk >= 1) {
      // (zeta_{q-1}, zeta_q] cup [1-zeta_q, 1-zeta_{q-1})
      bool left = cs > lad.zetas[qk - 1] && cs <= lad.zetas[qk];
      bool right = cs >= one - lad.zetas[qk] && cs < one - lad.zetas[qk - 1];
      CHECK((left || right));
    } else {
      // far from c: outside (zeta_0, 1 - zeta_0)
      bool far = cs <= lad.zetas[0] || cs >= one - lad.zetas[0];
      CHECK(far);
    }
  }
}

TEST_CASE("long-branched detection") {
  cutting_data gd = cutting_data_symbolic(symbol_seq::from_string("(101)"), 120);
  long_branched_result g = is_long_branched(gd, true);
  CHECK(g.status == lb_status::yes);
  CHECK(g.sup_q == 1);

  cutting_data full = cutting_data_symbolic(symbol_seq::from_string("1(0)"), 64);
  long_branched_result fu = is_long_branched(full, true);
  CHECK(fu.status == lb_status::yes);
  CHECK(fu.sup_q == 0);

  // Fibonacci: Q(k) = k - 2 grows, no verdict at finite depth
  std::vector<size_t> fib{1, 2, 3, 5, 8, 13, 21, 34, 55, 89};
  symbol_seq nu = kneading_from_cutting_times(fib, 89);
  cutting_data fd = cutting_data_symbolic(nu, 89);
  for (size_t k = 2; k < fd.Q.size(); ++k) CHECK(fd.Q[k] == k - 2);
  long_branched_result fr = is_long_branched(fd, false);
  CHECK(fr.status == lb_status::unknown);
}
