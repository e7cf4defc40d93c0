// Exact scalar arithmetic.
//
// A scalar is one of
//   rational   p/q with unbounded integers, always in lowest terms,
//   quadratic  a + b*sqrt(d) with rational a, b and a non-square integer d,
//   interval   an enclosure [lo, hi] with rational endpoints and an optional
//              generator that recomputes the enclosure at higher precision.
//
// Rational and quadratic values compare exactly.  Interval comparisons
// refine on demand; a test that stays ambiguous after the refinement budget
// throws precision_exhausted.  Every value is immutable after construction,
// so scalars can be shared freely across threads.

#ifndef LORENZ_EXACT_HPP
#define LORENZ_EXACT_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "lorenz/errors.hpp"

namespace lorenz {

using rational = mpq_class;

std::string rational_str(const rational& q);
rational rational_from_decimal(const std::string& s);

class exact_scalar {
public:
  enum class kind_t { rational_k, quadratic_k, interval_k };

  using enclosure_t = std::pair<rational, rational>;
  using generator_t = std::function<enclosure_t(unsigned bits)>;

  exact_scalar() : kind_(kind_t::rational_k), a_(0) {}
  exact_scalar(int n) : kind_(kind_t::rational_k), a_(n) {}
  exact_scalar(long n) : kind_(kind_t::rational_k), a_(static_cast<signed long>(n)) {}
  exact_scalar(long num, long den);
  explicit exact_scalar(rational q) : kind_(kind_t::rational_k), a_(std::move(q)) {
    a_.canonicalize();
  }

  // a + b*sqrt(d); reduces square factors of d and collapses to rational
  // when b == 0 or d turns out to be a perfect square.
  static exact_scalar quadratic(rational a, rational b, mpz_class d);
  static exact_scalar sqrt_of(unsigned long d) { return quadratic(0, 1, mpz_class(d)); }
  static exact_scalar golden(); // (1 + sqrt 5)/2
  static exact_scalar interval(rational lo, rational hi, generator_t gen = nullptr);

  // accepts "p/q", integer, decimal ("1.8"), "lo..hi", and the keywords
  // golden, invgolden, sqrt2, sqrt3, sqrt5
  static exact_scalar parse(const std::string& s);

  kind_t kind() const { return kind_; }
  bool is_rational() const { return kind_ == kind_t::rational_k; }
  bool is_interval() const { return kind_ == kind_t::interval_k; }
  bool is_exact() const { return kind_ != kind_t::interval_k; }

  const rational& rat() const; // requires rational kind
  const rational& quad_a() const { return a_; }
  const rational& quad_b() const { return b_; }
  const mpz_class& quad_d() const { return d_; }

  friend exact_scalar operator+(const exact_scalar& x, const exact_scalar& y);
  friend exact_scalar operator-(const exact_scalar& x, const exact_scalar& y);
  friend exact_scalar operator*(const exact_scalar& x, const exact_scalar& y);
  friend exact_scalar operator/(const exact_scalar& x, const exact_scalar& y);
  exact_scalar operator-() const;
  exact_scalar abs() const;

  // sign/cmp are exact; they throw precision_exhausted only when an interval
  // operand straddles the threshold beyond the refinement budget.
  int sign() const;
  int cmp(const exact_scalar& o) const;
  bool operator<(const exact_scalar& o) const { return cmp(o) < 0; }
  bool operator<=(const exact_scalar& o) const { return cmp(o) <= 0; }
  bool operator>(const exact_scalar& o) const { return cmp(o) > 0; }
  bool operator>=(const exact_scalar& o) const { return cmp(o) >= 0; }
  bool operator==(const exact_scalar& o) const { return cmp(o) == 0; }
  bool operator!=(const exact_scalar& o) const { return cmp(o) != 0; }

  mpz_class floor() const;
  exact_scalar frac() const; // x - floor(x), in [0,1)

  enclosure_t enclosure(unsigned bits) const;
  double to_double() const;

  // "p/q" for rationals, "lo..hi" decimals otherwise
  std::string str() const;

private:
  struct interval_rep {
    rational lo, hi;
    generator_t gen; // may be empty: enclosure is as good as it gets
    unsigned bits = 0;
  };

  kind_t kind_;
  rational a_, b_;
  mpz_class d_;
  std::shared_ptr<const interval_rep> iv_;

  static exact_scalar make_interval(rational lo, rational hi, generator_t gen, unsigned bits);
  exact_scalar refined(unsigned bits) const; // interval kind only
  friend exact_scalar binary_op(const exact_scalar&, const exact_scalar&, int op);
};

// ordering functor for std::map keys; exact kinds only
struct scalar_less {
  bool operator()(const exact_scalar& x, const exact_scalar& y) const { return x.cmp(y) < 0; }
};

inline exact_scalar operator+(const exact_scalar& x, int y) { return x + exact_scalar(y); }
inline exact_scalar operator-(const exact_scalar& x, int y) { return x - exact_scalar(y); }
inline exact_scalar operator*(int x, const exact_scalar& y) { return exact_scalar(x) * y; }

} // namespace lorenz

#endif
