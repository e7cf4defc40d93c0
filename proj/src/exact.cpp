#include "lorenz/exact.hpp"

#include <cctype>
#include <sstream>

namespace lorenz {

namespace {

constexpr unsigned start_bits = 64;
constexpr int max_doublings = 64;

mpz_class mpq_floor(const rational& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

// sqrt(d) at p bits: m = isqrt(d * 4^p) gives sqrt(d) in [m, m+1] / 2^p
std::pair<rational, rational> sqrt_enclosure(const mpz_class& d, unsigned bits) {
  mpz_class scaled = d << (2 * bits);
  mpz_class m;
  mpz_sqrt(m.get_mpz_t(), scaled.get_mpz_t());
  mpz_class pow2 = mpz_class(1) << bits;
  rational lo(m, pow2), hi(m + 1, pow2);
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi};
}

std::pair<rational, rational> quad_enclosure(const rational& a, const rational& b,
                                             const mpz_class& d, unsigned bits) {
  auto [slo, shi] = sqrt_enclosure(d, bits);
  if (sgn(b) >= 0) return {a + b * slo, a + b * shi};
  return {a + b * shi, a + b * slo};
}

// strips square factors found by trial division; small factors cover every
// discriminant this toolkit produces at desk scale
void reduce_radicand(mpz_class& d, rational& b) {
  if (mpz_perfect_square_p(d.get_mpz_t())) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), d.get_mpz_t());
    b *= rational(r);
    d = 1;
    return;
  }
  for (unsigned long p = 2; p <= 1000 && mpz_class(p) * p <= d; ++p) {
    mpz_class p2 = mpz_class(p) * p;
    while (mpz_divisible_p(d.get_mpz_t(), p2.get_mpz_t())) {
      d /= p2;
      b *= rational(static_cast<long>(p));
    }
  }
}

std::string decimal_str(const rational& q, int digits) {
  rational x = q;
  std::string out;
  if (sgn(x) < 0) {
    out += '-';
    x = -x;
  }
  mpz_class ip = mpq_floor(x);
  out += ip.get_str();
  rational fr = x - rational(ip);
  if (sgn(fr) == 0) return out;
  out += '.';
  for (int i = 0; i < digits && sgn(fr) != 0; ++i) {
    fr *= 10;
    mpz_class dig = mpq_floor(fr);
    out += dig.get_str();
    fr -= rational(dig);
  }
  return out;
}

} // namespace

std::string rational_str(const rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

rational rational_from_decimal(const std::string& s) {
  auto dot = s.find('.');
  if (dot == std::string::npos) return rational(s);
  std::string intpart = s.substr(0, dot);
  std::string fracpart = s.substr(dot + 1);
  bool neg = !intpart.empty() && intpart[0] == '-';
  if (neg) intpart = intpart.substr(1);
  if (intpart.empty()) intpart = "0";
  for (char c : fracpart)
    if (!std::isdigit(static_cast<unsigned char>(c))) throw error("bad decimal: " + s);
  mpz_class num;
  if (mpz_set_str(num.get_mpz_t(), (intpart + fracpart).c_str(), 10) != 0)
    throw error("bad decimal: " + s);
  mpz_class den = 1;
  for (size_t i = 0; i < fracpart.size(); ++i) den *= 10;
  rational q(num, den);
  q.canonicalize();
  return neg ? rational(-q) : q;
}

exact_scalar::exact_scalar(long num, long den) : kind_(kind_t::rational_k) {
  if (den == 0) throw error("zero denominator");
  a_ = rational(num, den);
  a_.canonicalize();
}

const rational& exact_scalar::rat() const {
  if (kind_ != kind_t::rational_k) throw error("scalar is not rational");
  return a_;
}

exact_scalar exact_scalar::quadratic(rational a, rational b, mpz_class d) {
  if (sgn(d) < 0) throw error("negative radicand");
  reduce_radicand(d, b);
  if (sgn(b) == 0 || d == 1) {
    exact_scalar r;
    r.kind_ = kind_t::rational_k;
    r.a_ = (d == 1) ? rational(a + b) : a;
    return r;
  }
  exact_scalar r;
  r.kind_ = kind_t::quadratic_k;
  r.a_ = std::move(a);
  r.b_ = std::move(b);
  r.d_ = std::move(d);
  return r;
}

exact_scalar exact_scalar::golden() { return quadratic(rational(1, 2), rational(1, 2), 5); }

exact_scalar exact_scalar::make_interval(rational lo, rational hi, generator_t gen,
                                         unsigned bits) {
  if (lo > hi) throw error("interval endpoints out of order");
  if (lo == hi && !gen) return exact_scalar(lo);
  exact_scalar r;
  r.kind_ = kind_t::interval_k;
  auto rep = std::make_shared<interval_rep>();
  rep->lo = std::move(lo);
  rep->hi = std::move(hi);
  rep->gen = std::move(gen);
  rep->bits = bits;
  r.iv_ = std::move(rep);
  return r;
}

exact_scalar exact_scalar::interval(rational lo, rational hi, generator_t gen) {
  return make_interval(std::move(lo), std::move(hi), std::move(gen), start_bits);
}

exact_scalar exact_scalar::refined(unsigned bits) const {
  if (kind_ != kind_t::interval_k || !iv_->gen || bits <= iv_->bits) return *this;
  auto [lo, hi] = iv_->gen(bits);
  return make_interval(std::move(lo), std::move(hi), iv_->gen, bits);
}

exact_scalar::enclosure_t exact_scalar::enclosure(unsigned bits) const {
  switch (kind_) {
    case kind_t::rational_k:
      return {a_, a_};
    case kind_t::quadratic_k:
      return quad_enclosure(a_, b_, d_, bits);
    case kind_t::interval_k:
      if (iv_->gen && bits > iv_->bits) return iv_->gen(bits);
      return {iv_->lo, iv_->hi};
  }
  throw error("unreachable");
}

namespace {

enum { op_add, op_sub, op_mul, op_div };

std::pair<rational, rational> interval_op(const std::pair<rational, rational>& x,
                                          const std::pair<rational, rational>& y, int op) {
  const auto& [a, b] = x;
  const auto& [c, d] = y;
  switch (op) {
    case op_add:
      return {a + c, b + d};
    case op_sub:
      return {a - d, b - c};
    case op_mul: {
      rational p1 = a * c, p2 = a * d, p3 = b * c, p4 = b * d;
      rational lo = std::min(std::min(p1, p2), std::min(p3, p4));
      rational hi = std::max(std::max(p1, p2), std::max(p3, p4));
      return {lo, hi};
    }
    case op_div: {
      if (sgn(c) <= 0 && sgn(d) >= 0) throw precision_exhausted("division by interval containing zero");
      rational p1 = a / c, p2 = a / d, p3 = b / c, p4 = b / d;
      rational lo = std::min(std::min(p1, p2), std::min(p3, p4));
      rational hi = std::max(std::max(p1, p2), std::max(p3, p4));
      return {lo, hi};
    }
  }
  throw error("unreachable");
}

} // namespace

exact_scalar binary_op(const exact_scalar& x, const exact_scalar& y, int op) {
  using kind_t = exact_scalar::kind_t;
  // rational fast path
  if (x.kind_ == kind_t::rational_k && y.kind_ == kind_t::rational_k) {
    switch (op) {
      case op_add:
        return exact_scalar(rational(x.a_ + y.a_));
      case op_sub:
        return exact_scalar(rational(x.a_ - y.a_));
      case op_mul:
        return exact_scalar(rational(x.a_ * y.a_));
      case op_div:
        if (sgn(y.a_) == 0) throw error("division by zero");
        return exact_scalar(rational(x.a_ / y.a_));
    }
  }
  // exact quadratic arithmetic when both operands live in the same field
  bool xq = x.kind_ == kind_t::quadratic_k, yq = y.kind_ == kind_t::quadratic_k;
  if ((xq || yq) && x.kind_ != kind_t::interval_k && y.kind_ != kind_t::interval_k &&
      (!xq || !yq || x.d_ == y.d_)) {
    mpz_class d = xq ? x.d_ : y.d_;
    rational a1 = x.a_, b1 = xq ? x.b_ : rational(0);
    rational a2 = y.a_, b2 = yq ? y.b_ : rational(0);
    switch (op) {
      case op_add:
        return exact_scalar::quadratic(a1 + a2, b1 + b2, d);
      case op_sub:
        return exact_scalar::quadratic(a1 - a2, b1 - b2, d);
      case op_mul:
        return exact_scalar::quadratic(a1 * a2 + b1 * b2 * rational(d), a1 * b2 + a2 * b1, d);
      case op_div: {
        rational den = a2 * a2 - b2 * b2 * rational(d);
        if (sgn(den) == 0) {
          if (sgn(a2) == 0 && sgn(b2) == 0) throw error("division by zero");
          throw error("degenerate quadratic divisor"); // impossible for non-square d
        }
        rational na = (a1 * a2 - b1 * b2 * rational(d)) / den;
        rational nb = (b1 * a2 - a1 * b2) / den;
        return exact_scalar::quadratic(na, nb, d);
      }
    }
  }
  // otherwise fall back to interval arithmetic with a composed generator
  unsigned bits = start_bits;
  if (x.kind_ == kind_t::interval_k) bits = std::max(bits, x.iv_->bits);
  if (y.kind_ == kind_t::interval_k) bits = std::max(bits, y.iv_->bits);
  auto val = interval_op(x.enclosure(bits), y.enclosure(bits), op);
  bool refinable = x.kind_ != kind_t::interval_k || x.iv_->gen || y.kind_ != kind_t::interval_k ||
                   y.iv_->gen;
  exact_scalar::generator_t gen = nullptr;
  if (refinable) {
    exact_scalar xc = x, yc = y;
    gen = [xc, yc, op](unsigned b) { return interval_op(xc.enclosure(b), yc.enclosure(b), op); };
  }
  return exact_scalar::make_interval(std::move(val.first), std::move(val.second), std::move(gen),
                                     bits);
}

exact_scalar operator+(const exact_scalar& x, const exact_scalar& y) {
  return binary_op(x, y, op_add);
}
exact_scalar operator-(const exact_scalar& x, const exact_scalar& y) {
  return binary_op(x, y, op_sub);
}
exact_scalar operator*(const exact_scalar& x, const exact_scalar& y) {
  return binary_op(x, y, op_mul);
}
exact_scalar operator/(const exact_scalar& x, const exact_scalar& y) {
  return binary_op(x, y, op_div);
}

exact_scalar exact_scalar::operator-() const { return exact_scalar(0) - *this; }

exact_scalar exact_scalar::abs() const { return sign() < 0 ? -*this : *this; }

int exact_scalar::sign() const {
  switch (kind_) {
    case kind_t::rational_k:
      return sgn(a_);
    case kind_t::quadratic_k: {
      int sa = sgn(a_), sb = sgn(b_);
      if (sa == 0) return sb;
      if (sb == 0) return sa;
      if (sa == sb) return sa;
      rational lhs = a_ * a_, rhs = b_ * b_ * rational(d_);
      int c = ::cmp(lhs, rhs);
      if (c == 0) throw error("degenerate quadratic"); // impossible for non-square d
      return c > 0 ? sa : sb;
    }
    case kind_t::interval_k: {
      unsigned bits = std::max(start_bits, iv_->bits);
      rational prev_width(-1);
      int stagnant = 0;
      for (int round = 0; round <= max_doublings; ++round) {
        auto [lo, hi] = enclosure(bits);
        if (sgn(lo) > 0) return 1;
        if (sgn(hi) < 0) return -1;
        if (sgn(lo) == 0 && sgn(hi) == 0) return 0;
        rational width = hi - lo;
        if (prev_width >= 0 && width >= prev_width) {
          if (++stagnant >= 2) break;
        } else {
          stagnant = 0;
        }
        prev_width = width;
        bits *= 2;
      }
      throw precision_exhausted("sign of interval scalar straddling zero");
    }
  }
  throw error("unreachable");
}

int exact_scalar::cmp(const exact_scalar& o) const {
  if (kind_ == kind_t::rational_k && o.kind_ == kind_t::rational_k)
    return ::cmp(a_, o.a_);
  if (is_exact() && o.is_exact()) {
    bool same_field = kind_ != kind_t::quadratic_k || o.kind_ != kind_t::quadratic_k || d_ == o.d_;
    if (same_field) return (*this - o).sign();
    // distinct reduced radicands: values are never equal, refine enclosures
    unsigned bits = start_bits;
    for (int round = 0; round <= max_doublings; ++round) {
      auto ex = enclosure(bits);
      auto eo = o.enclosure(bits);
      if (ex.second < eo.first) return -1;
      if (ex.first > eo.second) return 1;
      bits *= 2;
    }
    throw precision_exhausted("comparing quadratics from different fields");
  }
  return (*this - o).sign();
}

mpz_class exact_scalar::floor() const {
  if (kind_ == kind_t::rational_k) return mpq_floor(a_);
  unsigned bits = start_bits;
  if (kind_ == kind_t::interval_k) bits = std::max(bits, iv_->bits);
  rational prev_width(-1);
  int stagnant = 0;
  for (int round = 0; round <= max_doublings; ++round) {
    auto [lo, hi] = enclosure(bits);
    mpz_class fl = mpq_floor(lo), fh = mpq_floor(hi);
    if (fl == fh) return fl;
    if (kind_ == kind_t::quadratic_k) {
      bits *= 2;
      continue; // irrational value: enclosure eventually avoids the integer
    }
    rational width = hi - lo;
    if (prev_width >= 0 && width >= prev_width) {
      if (++stagnant >= 2) break;
    } else {
      stagnant = 0;
    }
    prev_width = width;
    bits *= 2;
  }
  throw precision_exhausted("floor of interval scalar near an integer");
}

exact_scalar exact_scalar::frac() const { return *this - exact_scalar(rational(floor())); }

double exact_scalar::to_double() const {
  auto [lo, hi] = enclosure(start_bits);
  return (lo.get_d() + hi.get_d()) / 2;
}

std::string exact_scalar::str() const {
  if (kind_ == kind_t::rational_k) return rational_str(a_);
  auto [lo, hi] = enclosure(128);
  return decimal_str(lo, 17) + ".." + decimal_str(hi, 17);
}

exact_scalar exact_scalar::parse(const std::string& s) {
  if (s.empty()) throw error("empty scalar");
  if (s == "golden") return golden();
  if (s == "invgolden") return quadratic(rational(-1, 2), rational(1, 2), 5);
  if (s == "sqrt2") return sqrt_of(2);
  if (s == "sqrt3") return sqrt_of(3);
  if (s == "sqrt5") return sqrt_of(5);
  auto dots = s.find("..");
  if (dots != std::string::npos) {
    rational lo = rational_from_decimal(s.substr(0, dots));
    rational hi = rational_from_decimal(s.substr(dots + 2));
    return interval(lo, hi);
  }
  if (s.find('/') != std::string::npos) {
    rational q(s);
    q.canonicalize();
    return exact_scalar(q);
  }
  return exact_scalar(rational_from_decimal(s));
}

} // namespace lorenz
