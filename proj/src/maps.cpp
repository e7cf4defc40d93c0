#include "lorenz/maps.hpp"

namespace lorenz {

exact_scalar piece_fn::eval(const exact_scalar& x) const {
  if (is_constant()) return c0;
  if (is_affine()) return c1 * x + c0;
  return c2 * x * x + c1 * x + c0;
}

int piece_fn::slope_sign_at(const exact_scalar& x) const {
  if (is_affine()) return c1.sign();
  return (exact_scalar(2) * c2 * x + c1).sign();
}

bool piece::contains(const exact_scalar& x) const {
  int cl = x.cmp(lo);
  if (cl < 0 || (cl == 0 && !closed_lo)) return false;
  int ch = x.cmp(hi);
  if (ch > 0 || (ch == 0 && !closed_hi)) return false;
  return true;
}

const piece& map_spec::piece_at(const exact_scalar& x) const {
  for (const auto& p : pieces)
    if (p.contains(x)) return p;
  throw error("point outside map domain: " + x.str());
}

exact_scalar map_spec::eval(const exact_scalar& x) const { return piece_at(x).fn.eval(x); }

exact_scalar map_spec::eval_iter(const exact_scalar& x, int n) const {
  exact_scalar y = x;
  for (int i = 0; i < n; ++i) y = eval(y);
  return y;
}

exact_scalar map_spec::wrap(const exact_scalar& x) const {
  exact_scalar circ(circumference());
  exact_scalar k(rational((x / circ).floor()));
  return x - circ * k;
}

exact_scalar map_spec::eval_lift(const exact_scalar& x) const {
  exact_scalar circ(circumference());
  mpz_class k = (x / circ).floor();
  exact_scalar w = x - circ * exact_scalar(rational(k));
  if (w.sign() == 0 && x.sign() != 0) {
    // exact multiples of the circumference evaluate at the closed right end
    // of the fundamental domain when the piece list reaches it
    const piece& last = pieces.back();
    if (last.closed_hi && last.hi.cmp(circ) == 0) {
      w = circ;
      k -= 1;
    }
  }
  const piece& p = piece_at(w);
  return p.fn.eval(w) + circ * exact_scalar(rational(mpz_class(p.lift_k) + k));
}

std::pair<exact_scalar, int> map_spec::eval_limit(const exact_scalar& x, int side) const {
  const piece* chosen = nullptr;
  if (side == 0) {
    chosen = &piece_at(x);
  } else if (side < 0) {
    for (const auto& p : pieces)
      if (x.cmp(p.lo) > 0 && x.cmp(p.hi) <= 0) {
        chosen = &p;
        break;
      }
  } else {
    for (const auto& p : pieces)
      if (x.cmp(p.lo) >= 0 && x.cmp(p.hi) < 0) {
        chosen = &p;
        break;
      }
  }
  if (!chosen) throw error("one-sided evaluation outside domain: " + x.str());
  int slope = chosen->fn.slope_sign_at(x);
  return {chosen->fn.eval(x), side * slope};
}

void map_spec::validate() const {
  if (pieces.empty()) throw error("map has no pieces");
  if (pieces.front().lo.sign() != 0 || !pieces.front().closed_lo)
    throw error("map domain must start closed at 0");
  for (size_t i = 0; i + 1 < pieces.size(); ++i) {
    const auto& l = pieces[i];
    const auto& r = pieces[i + 1];
    if (l.hi.cmp(r.lo) != 0) throw error("pieces do not tile the domain");
    if (l.closed_hi == r.closed_lo) throw error("breakpoint owned by both or neither piece");
    if (l.lo.cmp(l.hi) >= 0) throw error("empty or reversed piece");
  }
  exact_scalar circ(circumference());
  if (pieces.back().hi.cmp(circ) != 0) throw error("pieces do not reach the domain end");
}

namespace {

exact_scalar half() { return exact_scalar(1, 2); }

void check_range(bool ok, const std::string& what) {
  if (!ok) throw parameter_out_of_range(what);
}

} // namespace

map_spec make_family(const std::string& family, const exact_scalar& parameter) {
  map_spec m;
  m.family = family;
  m.parameter = parameter;
  const exact_scalar& lam = parameter;
  if (family == "tent-symmetric") {
    check_range(lam > exact_scalar(1) && lam <= exact_scalar(2), "tent slope must be in (1,2]");
    exact_scalar c = half();
    m.domain = domain_t::interval01;
    m.symmetric = true;
    m.critical = c;
    m.pieces.push_back({exact_scalar(0), c, true, true,
                        piece_fn::affine(lam, exact_scalar(1) - lam * half()), 0});
    m.pieces.push_back({c, exact_scalar(1), false, true,
                        piece_fn::affine(-lam, exact_scalar(1) + lam * half()), 0});
  } else if (family == "tent-core") {
    check_range(lam > exact_scalar(1) && lam <= exact_scalar(2), "tent slope must be in (1,2]");
    exact_scalar a = (lam - exact_scalar(1)) / lam;
    m.domain = domain_t::interval01;
    m.critical = a;
    m.pieces.push_back({exact_scalar(0), a, true, true,
                        piece_fn::affine(lam, exact_scalar(2) - lam), 0});
    m.pieces.push_back({a, exact_scalar(1), false, true, piece_fn::affine(-lam, lam), 0});
  } else if (family == "logistic") {
    check_range(lam > exact_scalar(0) && lam <= exact_scalar(4),
                "logistic parameter must be in (0,4]");
    exact_scalar c = half();
    m.domain = domain_t::interval01;
    m.symmetric = true;
    m.critical = c;
    piece_fn q{-lam, lam, exact_scalar(1) - lam / exact_scalar(4)};
    m.pieces.push_back({exact_scalar(0), c, true, true, q, 0});
    m.pieces.push_back({c, exact_scalar(1), false, true, q, 0});
  } else {
    throw parameter_out_of_range("unknown family: " + family);
  }
  m.validate();
  return m;
}

namespace {

void require_symmetric_unimodal(const map_spec& f) {
  if (!f.symmetric || !f.critical || f.pieces.size() != 2)
    throw not_symmetric("expected a symmetric unimodal map");
  if (f.eval(*f.critical) != exact_scalar(1))
    throw not_symmetric("expected f(c) = 1");
}

piece_fn negate_plus_one(const piece_fn& fn) {
  return {-fn.c2, -fn.c1, exact_scalar(1) - fn.c0};
}

} // namespace

map_spec derive_increasing_lorenz(const map_spec& f) {
  require_symmetric_unimodal(f);
  exact_scalar c = *f.critical;
  map_spec phi;
  phi.domain = domain_t::circle1;
  phi.family = "phi:" + f.family;
  phi.parameter = f.parameter;
  phi.critical = c;
  phi.pieces.push_back({exact_scalar(0), c, true, true, f.pieces[0].fn, 0});
  phi.pieces.push_back({c, exact_scalar(1), false, true, negate_plus_one(f.pieces[1].fn), 1});
  phi.validate();
  return phi;
}

map_spec derive_decreasing_lorenz(const map_spec& f) {
  require_symmetric_unimodal(f);
  exact_scalar c = *f.critical;
  map_spec psi;
  psi.domain = domain_t::interval01;
  psi.family = "psi:" + f.family;
  psi.parameter = f.parameter;
  psi.critical = c;
  psi.pieces.push_back({exact_scalar(0), c, true, true, negate_plus_one(f.pieces[0].fn), 0});
  psi.pieces.push_back({c, exact_scalar(1), false, true, f.pieces[1].fn, 0});
  psi.validate();
  return psi;
}

exact_scalar solve_on_piece(const piece& p, const exact_scalar& y) {
  const piece_fn& fn = p.fn;
  if (fn.is_constant()) throw error("cannot invert a constant piece");
  if (fn.is_affine()) return (y - fn.c0) / fn.c1;
  if (!fn.c2.is_rational() || !fn.c1.is_rational() || !fn.c0.is_rational() || !y.is_rational())
    throw error("quadratic piece solving needs rational data");
  // c2 x^2 + c1 x + (c0 - y) = 0
  rational A = fn.c2.rat(), B = fn.c1.rat(), C = fn.c0.rat() - y.rat();
  rational disc = B * B - 4 * A * C;
  if (sgn(disc) < 0) throw error("no real solution on piece");
  // sqrt(p/q) = sqrt(p q)/q
  mpz_class pq = disc.get_num() * disc.get_den();
  exact_scalar root = exact_scalar::quadratic(0, rational(1, disc.get_den()), pq);
  exact_scalar x1 = (exact_scalar(rational(-B)) + root) / exact_scalar(rational(2 * A));
  exact_scalar x2 = (exact_scalar(rational(-B)) - root) / exact_scalar(rational(2 * A));
  if (x1 >= p.lo && x1 <= p.hi) return x1;
  if (x2 >= p.lo && x2 <= p.hi) return x2;
  throw error("no solution inside piece");
}

critical_data compute_critical_data(const map_spec& phi) {
  if (phi.pieces.size() != 2 || !phi.critical)
    throw error("expected an unstunted increasing Lorenz map");
  exact_scalar c = *phi.critical;
  exact_scalar phi1 = phi.eval(exact_scalar(1));
  exact_scalar a = solve_on_piece(phi.pieces[0], phi1);
  exact_scalar b = solve_on_piece(phi.pieces[1], a);
  critical_data cd{c, a, b, a.cmp(c) == 0};
  if (!cd.plateau_degenerate && a.cmp(c) > 0) throw error("a > c: map is not Lorenz-like");
  return cd;
}

map_spec stunt(const map_spec& phi, const critical_data& crit) {
  if (phi.pieces.size() != 2) throw error("expected an unstunted increasing Lorenz map");
  exact_scalar phi1 = phi.eval(exact_scalar(1));
  map_spec bar;
  bar.domain = domain_t::circle1;
  bar.family = "stunted:" + phi.family;
  bar.parameter = phi.parameter;
  bar.critical = phi.critical;
  bar.plateau = plateau_info{exact_scalar(0), crit.a, phi1};
  bar.pieces.push_back(
      {exact_scalar(0), crit.a, true, true, piece_fn::constant(phi1), phi.pieces[0].lift_k});
  if (!crit.plateau_degenerate)
    bar.pieces.push_back({crit.a, crit.c, false, true, phi.pieces[0].fn, phi.pieces[0].lift_k});
  bar.pieces.push_back({crit.c, exact_scalar(1), false, true, phi.pieces[1].fn,
                        phi.pieces[1].lift_k});
  bar.validate();
  // plateau joins the increasing branch exactly
  if (!crit.plateau_degenerate && phi.pieces[0].fn.eval(crit.a) != phi1)
    throw error("plateau does not meet the left branch");
  return bar;
}

map_spec stunt(const map_spec& phi) { return stunt(phi, compute_critical_data(phi)); }

map_spec lift_of(const map_spec& m) {
  if (m.domain == domain_t::interval01)
    throw not_degree_one("interval map has no degree-one lift");
  exact_scalar circ(m.circumference());
  // translation structure: Phi(x + circ) = Phi(x) + circ on a rational probe grid
  for (int i = 1; i < 8; ++i) {
    exact_scalar x(i, 8);
    x = x * circ;
    exact_scalar lhs = m.eval_lift(x + circ);
    exact_scalar rhs = m.eval_lift(x) + circ;
    if (lhs != rhs) throw not_degree_one("lift translation identity fails");
    exact_scalar modv = m.eval_lift(x) - circ * exact_scalar(rational((m.eval_lift(x) / circ).floor()));
    if (modv != m.wrap(m.eval(x))) throw not_degree_one("lift does not project to the map");
  }
  return m;
}

} // namespace lorenz
