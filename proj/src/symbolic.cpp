#include "lorenz/symbolic.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

namespace lorenz {

symbol_seq symbol_seq::finite(std::vector<uint8_t> w) {
  symbol_seq s;
  s.prefix = std::move(w);
  return s;
}

symbol_seq symbol_seq::periodic(std::vector<uint8_t> pre, std::vector<uint8_t> per) {
  if (per.empty()) throw error("periodic word needs a nonempty period");
  symbol_seq s;
  s.prefix = std::move(pre);
  s.period = std::move(per);
  return s;
}

symbol_seq symbol_seq::from_string(const std::string& str) {
  std::vector<uint8_t> pre, per;
  bool in_period = false;
  bool closed = false;
  for (char ch : str) {
    if (ch == '(') {
      if (in_period || closed) throw error("bad word literal: " + str);
      in_period = true;
    } else if (ch == ')') {
      if (!in_period) throw error("bad word literal: " + str);
      in_period = false;
      closed = true;
    } else if (ch == '0' || ch == '1') {
      if (closed) throw error("bad word literal: " + str);
      (in_period ? per : pre).push_back(ch == '1');
    } else {
      throw error("bad symbol in word literal: " + str);
    }
  }
  if (in_period) throw error("unterminated period in word literal: " + str);
  if (per.empty()) return finite(std::move(pre));
  return periodic(std::move(pre), std::move(per));
}

std::string symbol_seq::to_string() const {
  std::string out;
  for (uint8_t b : prefix) out += b ? '1' : '0';
  if (infinite()) {
    out += '(';
    for (uint8_t b : period) out += b ? '1' : '0';
    out += ')';
  }
  return out;
}

size_t symbol_seq::available() const {
  return infinite() ? std::numeric_limits<size_t>::max() : prefix.size();
}

int symbol_seq::at(size_t k) const {
  if (k == 0) throw error("symbol indices are 1-based");
  if (k <= prefix.size()) return prefix[k - 1];
  if (!infinite()) throw depth_exceeded("word index past end of finite word");
  return period[(k - prefix.size() - 1) % period.size()];
}

symbol_seq symbol_seq::shift(size_t n) const {
  if (n == 0) return *this;
  symbol_seq s;
  s.period = period;
  if (n < prefix.size()) {
    s.prefix.assign(prefix.begin() + static_cast<long>(n), prefix.end());
    return s;
  }
  if (!infinite()) {
    if (n > prefix.size()) throw depth_exceeded("shift past end of finite word");
    return s; // empty finite word
  }
  size_t r = (n - prefix.size()) % period.size();
  std::rotate(s.period.begin(), s.period.begin() + static_cast<long>(r), s.period.end());
  return s;
}

std::vector<uint8_t> symbol_seq::take(size_t n) const {
  std::vector<uint8_t> out;
  out.reserve(n);
  for (size_t k = 1; k <= n; ++k) out.push_back(static_cast<uint8_t>(at(k)));
  return out;
}

size_t symbol_seq::ones_in_prefix(size_t n) const {
  size_t ones = 0;
  for (size_t k = 1; k <= n; ++k) ones += static_cast<size_t>(at(k));
  return ones;
}

bool symbol_seq::same_sequence(const symbol_seq& o) const {
  if (infinite() != o.infinite()) return false;
  if (!infinite()) return prefix == o.prefix;
  size_t bound = std::max(prefix.size(), o.prefix.size()) +
                 std::lcm(period.size(), o.period.size());
  for (size_t k = 1; k <= bound; ++k)
    if (at(k) != o.at(k)) return false;
  return true;
}

ordering parity_lex_compare(const symbol_seq& u, const symbol_seq& v, size_t depth) {
  size_t bound;
  bool exact = u.infinite() && v.infinite();
  if (exact)
    bound = std::max(u.preperiod(), v.preperiod()) +
            std::lcm(u.period.size(), v.period.size());
  else
    bound = std::min({depth, u.available(), v.available()});
  size_t ones = 0;
  for (size_t j = 1; j <= bound; ++j) {
    int a = u.at(j), b = v.at(j);
    if (a != b) {
      bool flip = (ones % 2) != 0;
      bool a_less = a < b;
      if (flip) a_less = !a_less;
      return a_less ? ordering::less : ordering::greater;
    }
    ones += static_cast<size_t>(a);
  }
  return exact ? ordering::equal : ordering::undecided;
}

namespace {

struct signed_point {
  exact_scalar v;
  int side; // -1 lower limit, 0 exact, +1 upper limit
};

// symbol of the point relative to c; forks are handled by the caller
int symbol_of(const signed_point& p, const exact_scalar& c) {
  int cv = p.v.cmp(c);
  if (cv < 0) return 0;
  if (cv > 0) return 1;
  if (p.side < 0) return 0;
  if (p.side > 0) return 1;
  return -1; // exact hit, no side information
}

// continue an orbit for `steps` symbols, resolving any exact hit by the
// parity-lex smaller side (even number of 1s so far: lower side)
std::vector<uint8_t> greedy_word(const map_spec& g, signed_point p, const exact_scalar& c,
                                 size_t steps, size_t ones) {
  std::vector<uint8_t> out;
  out.reserve(steps);
  for (size_t i = 0; i < steps; ++i) {
    int s = symbol_of(p, c);
    int side = p.side;
    if (s < 0) {
      bool lower_smaller = (ones % 2) == 0;
      s = lower_smaller ? 0 : 1;
      side = lower_smaller ? -1 : 1;
    }
    out.push_back(static_cast<uint8_t>(s));
    ones += static_cast<size_t>(s);
    auto [nv, ns] = g.eval_limit(p.v, side);
    p = {nv, ns};
  }
  return out;
}

} // namespace

itinerary_result itinerary(const map_spec& g, const exact_scalar& x, size_t n) {
  if (!g.critical) throw error("map has no declared critical point");
  const exact_scalar c = *g.critical;
  itinerary_result res;
  std::vector<uint8_t> word;
  word.reserve(n);
  signed_point p{x, 0};
  for (size_t k = 0; k < n; ++k) {
    int s = symbol_of(p, c);
    if (s < 0) {
      // first exact hit: fork into the two one-sided limit words
      res.critical_hit = true;
      res.hit_step = k;
      size_t ones = 0;
      for (uint8_t b : word) ones += b;
      std::vector<uint8_t> lo_word = word, up_word = word;
      lo_word.push_back(0);
      up_word.push_back(1);
      auto [lv, ls] = g.eval_limit(c, -1);
      auto [uv, us] = g.eval_limit(c, +1);
      auto lo_rest = greedy_word(g, {lv, ls}, c, n - k - 1, ones);
      auto up_rest = greedy_word(g, {uv, us}, c, n - k - 1, ones + 1);
      lo_word.insert(lo_word.end(), lo_rest.begin(), lo_rest.end());
      up_word.insert(up_word.end(), up_rest.begin(), up_rest.end());
      res.lower = symbol_seq::finite(lo_word);
      res.lower->limit_side = symbol_seq::limit_side_t::lower;
      res.upper = symbol_seq::finite(up_word);
      res.upper->limit_side = symbol_seq::limit_side_t::upper;
      bool lower_smaller = (ones % 2) == 0;
      res.principal = lower_smaller ? *res.lower : *res.upper;
      return res;
    }
    word.push_back(static_cast<uint8_t>(s));
    auto [nv, ns] = g.eval_limit(p.v, p.side);
    p = {nv, ns};
  }
  res.principal = symbol_seq::finite(word);
  return res;
}

symbol_seq kneading_sequence(const map_spec& f, size_t depth) {
  if (!f.critical) throw error("map has no declared critical point");
  const exact_scalar c = *f.critical;
  auto [v1, s1] = f.eval_limit(c, -1); // x -> c from below: orbit of the critical value
  signed_point p{v1, s1};
  std::vector<uint8_t> word;
  const bool track_cycles = f.parameter.is_exact();
  struct key_less {
    bool operator()(const std::pair<exact_scalar, int>& a,
                    const std::pair<exact_scalar, int>& b) const {
      int c = a.first.cmp(b.first);
      if (c != 0) return c < 0;
      return a.second < b.second;
    }
  };
  std::map<std::pair<exact_scalar, int>, size_t, key_less> seen;
  for (size_t k = 0; k < depth; ++k) {
    if (track_cycles) {
      auto key = std::make_pair(p.v, p.side);
      auto it = seen.find(key);
      if (it != seen.end()) {
        std::vector<uint8_t> pre(word.begin(), word.begin() + static_cast<long>(it->second));
        std::vector<uint8_t> per(word.begin() + static_cast<long>(it->second), word.end());
        return symbol_seq::periodic(std::move(pre), std::move(per));
      }
      seen.emplace(key, k);
    }
    int s = symbol_of(p, c);
    if (s < 0) throw error("kneading orbit lost side information");
    word.push_back(static_cast<uint8_t>(s));
    auto [nv, ns] = f.eval_limit(p.v, p.side);
    p = {nv, ns};
  }
  return symbol_seq::finite(word);
}

rho_result rho(const symbol_seq& e, const symbol_seq& nu, size_t n) {
  if (e.infinite() && nu.infinite()) {
    size_t bound = n + std::max(e.preperiod(), nu.preperiod()) +
                   std::lcm(e.period.size(), nu.period.size()) + 1;
    for (size_t k = n + 1; k <= bound; ++k)
      if (e.at(k) != nu.at(k - n)) return {rho_result::kind_t::value, k};
    return {rho_result::kind_t::infinite, 0};
  }
  for (size_t k = n + 1;; ++k) {
    if (!e.has_index(k) || !nu.has_index(k - n))
      return {rho_result::kind_t::depth_exceeded, 0};
    if (e.at(k) != nu.at(k - n)) return {rho_result::kind_t::value, k};
  }
}

theta_seq theta_signs(const symbol_seq& nu, size_t n) {
  theta_seq t;
  t.signs.reserve(n + 1);
  int s = 1;
  t.signs.push_back(s);
  for (size_t k = 1; k <= n; ++k) {
    if (nu.at(k) == 1) s = -s;
    t.signs.push_back(s);
  }
  return t;
}

symbol_seq lorenz_recode(const symbol_seq& nu, size_t n) {
  auto parity_word = [&](size_t from, size_t to, unsigned start_par) {
    std::vector<uint8_t> out;
    unsigned par = start_par;
    for (size_t k = from; k <= to; ++k) {
      par ^= static_cast<unsigned>(nu.at(k));
      out.push_back(static_cast<uint8_t>(par));
    }
    return out;
  };
  if (!nu.infinite()) {
    size_t len = std::min(n, nu.available());
    return symbol_seq::finite(parity_word(1, len, 0));
  }
  size_t pre = nu.preperiod(), p = nu.period.size();
  size_t block_ones = 0;
  for (uint8_t b : nu.period) block_ones += b;
  size_t out_p = (block_ones % 2 == 0) ? p : 2 * p;
  std::vector<uint8_t> all = parity_word(1, pre + out_p, 0);
  std::vector<uint8_t> opre(all.begin(), all.begin() + static_cast<long>(pre));
  std::vector<uint8_t> oper(all.begin() + static_cast<long>(pre), all.end());
  return symbol_seq::periodic(std::move(opre), std::move(oper));
}

symbol_seq lorenz_decode(const symbol_seq& nuphi) {
  auto decode_range = [&](size_t to) {
    std::vector<uint8_t> out;
    unsigned prev = 0;
    for (size_t k = 1; k <= to; ++k) {
      unsigned cur = static_cast<unsigned>(nuphi.at(k));
      out.push_back(static_cast<uint8_t>(prev ^ cur));
      prev = cur;
    }
    return out;
  };
  if (!nuphi.infinite()) return symbol_seq::finite(decode_range(nuphi.available()));
  size_t pre = nuphi.preperiod(), p = nuphi.period.size();
  std::vector<uint8_t> all = decode_range(pre + 1 + p);
  std::vector<uint8_t> opre(all.begin(), all.begin() + static_cast<long>(pre + 1));
  std::vector<uint8_t> oper(all.begin() + static_cast<long>(pre + 1), all.end());
  return symbol_seq::periodic(std::move(opre), std::move(oper));
}

tristate is_admissible(const symbol_seq& e, const symbol_seq& nu, size_t depth) {
  symbol_seq sigma_nu = nu.shift(1);
  size_t effective = depth;
  if (e.infinite()) effective = std::min(depth, e.preperiod() + e.period.size());
  bool saw_undecided = false;
  for (size_t n = 0; n < effective; ++n) {
    if (!e.infinite() && n >= e.available()) break;
    symbol_seq w = e.shift(n);
    ordering up = parity_lex_compare(w, nu, depth);
    if (up == ordering::greater) return tristate::no;
    if (up == ordering::undecided) saw_undecided = true;
    ordering dn = parity_lex_compare(w, sigma_nu, depth);
    if (dn == ordering::less) return tristate::no;
    if (dn == ordering::undecided) saw_undecided = true;
  }
  return saw_undecided ? tristate::undecided : tristate::yes;
}

symbol_seq feigenbaum_prefix(size_t n) {
  if (n > (1u << 20)) throw depth_exceeded("feigenbaum prefix limited to 2^20 symbols");
  std::vector<uint8_t> b{1};
  while (b.size() < n) {
    std::vector<uint8_t> copy = b;
    copy.back() ^= 1;
    b.insert(b.end(), copy.begin(), copy.end());
  }
  b.resize(n);
  return symbol_seq::finite(std::move(b));
}

} // namespace lorenz
