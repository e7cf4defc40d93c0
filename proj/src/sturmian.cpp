#include "lorenz/sturmian.hpp"

#include <set>
#include <string>

namespace lorenz {

rotational_word rotational_sequence(const exact_scalar& alpha, const exact_scalar& beta,
                                    size_t n) {
  if (!(alpha > exact_scalar(0) && alpha < exact_scalar(1)))
    throw parameter_out_of_range("rotation angle must lie in (0,1)");
  rotational_word out;
  std::vector<uint8_t> word, lo_word, up_word;
  word.reserve(n);
  exact_scalar x = beta.frac();
  bool forked = false;
  for (size_t j = 0; j < n; ++j) {
    bool at_zero = x.sign() == 0;
    int vs_alpha = x.cmp(alpha);
    // 0 is in, alpha is out
    uint8_t principal = vs_alpha < 0 ? 1 : 0;
    word.push_back(principal);
    if (at_zero && j >= 1 && !out.boundary_hit) {
      out.boundary_hit = j;
      forked = true;
      lo_word = word;
      up_word = word;
      lo_word.back() = 0; // just below 1: outside [0, alpha)
      up_word.back() = 1;
    } else if (forked) {
      uint8_t lo_sym = principal, up_sym = principal;
      if (at_zero) {
        lo_sym = 0;
        up_sym = 1;
      } else if (vs_alpha == 0) {
        lo_sym = 1;
        up_sym = 0;
      }
      lo_word.push_back(lo_sym);
      up_word.push_back(up_sym);
    }
    x = (x + alpha).frac();
  }
  out.word = symbol_seq::finite(std::move(word));
  if (forked) {
    out.lower = symbol_seq::finite(std::move(lo_word));
    out.lower->limit_side = symbol_seq::limit_side_t::lower;
    out.upper = symbol_seq::finite(std::move(up_word));
    out.upper->limit_side = symbol_seq::limit_side_t::upper;
  }
  return out;
}

bool is_balanced(const symbol_seq& w, size_t maxlen) {
  if (w.infinite()) throw error("balancedness check expects a finite word");
  const auto& v = w.prefix;
  for (size_t len = 1; len <= maxlen && len <= v.size(); ++len) {
    size_t count = 0;
    for (size_t i = 0; i < len; ++i) count += v[i];
    size_t mn = count, mx = count;
    for (size_t i = len; i < v.size(); ++i) {
      count += v[i];
      count -= v[i - len];
      mn = std::min(mn, count);
      mx = std::max(mx, count);
    }
    if (mx - mn > 1) return false;
  }
  return true;
}

std::vector<size_t> factor_complexity(const symbol_seq& w, size_t maxlen) {
  if (w.infinite()) throw error("factor complexity expects a finite word");
  const auto& v = w.prefix;
  if (v.size() < 10 * maxlen)
    throw insufficient_length("word shorter than 10 * maxlen");
  std::string s;
  s.reserve(v.size());
  for (uint8_t b : v) s += b ? '1' : '0';
  std::vector<size_t> p;
  for (size_t len = 1; len <= maxlen; ++len) {
    std::set<std::string_view> factors;
    std::string_view sv{s};
    for (size_t i = 0; i + len <= s.size(); ++i) factors.insert(sv.substr(i, len));
    p.push_back(factors.size());
  }
  return p;
}

} // namespace lorenz
