#include "lorenz/io.hpp"

#include <sstream>

namespace lorenz {

std::string scalar_str(const exact_scalar& s) { return s.str(); }

namespace {

std::string interval_str(const rational& lo, const rational& hi) {
  if (lo == hi) return rational_str(lo);
  return rational_str(lo) + ".." + rational_str(hi);
}

json piece_json(const piece& p) {
  json j;
  j["lo"] = scalar_str(p.lo);
  j["hi"] = scalar_str(p.hi);
  j["closed_lo"] = p.closed_lo;
  j["closed_hi"] = p.closed_hi;
  j["c2"] = scalar_str(p.fn.c2);
  j["c1"] = scalar_str(p.fn.c1);
  j["c0"] = scalar_str(p.fn.c0);
  j["lift_k"] = p.lift_k;
  return j;
}

} // namespace

json to_json(const map_spec& m) {
  json j;
  j["family"] = m.family;
  j["parameter"] = scalar_str(m.parameter);
  switch (m.domain) {
    case domain_t::interval01:
      j["domain"] = "interval";
      break;
    case domain_t::circle1:
      j["domain"] = "circle1";
      break;
    case domain_t::circle2:
      j["domain"] = "circle2";
      break;
  }
  j["pieces"] = json::array();
  for (const auto& p : m.pieces) j["pieces"].push_back(piece_json(p));
  if (m.plateau) {
    j["plateau"] = {{"lo", scalar_str(m.plateau->lo)},
                    {"hi", scalar_str(m.plateau->hi)},
                    {"value", scalar_str(m.plateau->value)}};
  } else {
    j["plateau"] = nullptr;
  }
  j["critical"] = m.critical ? json(scalar_str(*m.critical)) : json(nullptr);
  return j;
}

json to_json(const cutting_data& cd) {
  json j;
  j["S"] = cd.S;
  j["Shat"] = cd.Shat;
  j["Q"] = cd.Q;
  j["Qhat"] = cd.Qhat;
  j["depth"] = cd.depth;
  j["kappa"] = cd.kappa ? json(*cd.kappa) : json(nullptr);
  return j;
}

json to_json(const rotation_result& r) {
  json j;
  j["status"] = r.exact() ? "ExactHit" : "NoHitUpToDepth";
  j["alpha"] = r.exact() ? json(rational_str(r.alpha_lo))
                         : json::array({rational_str(r.alpha_lo), rational_str(r.alpha_hi)});
  j["K"] = r.K ? json(*r.K) : json(nullptr);
  j["S_K"] = r.S_K ? json(*r.S_K) : json(nullptr);
  j["prime_end"] = r.exact()
                       ? json(rational_str(r.prime_end_lo()))
                       : json::array({rational_str(r.prime_end_lo()),
                                      rational_str(r.prime_end_hi())});
  j["depth"] = r.depth;
  return j;
}

json to_json(const rotation_estimate& e) {
  json j;
  j["estimate"] = rational_str(e.value);
  j["half_width"] = rational_str(e.half_width);
  j["ones"] = e.ones;
  j["n"] = e.n;
  return j;
}

json to_json(const period_report& r) {
  json j;
  j["map"] = r.map_id;
  j["N"] = r.max_period;
  json periods = json::object();
  for (const auto& [m, ws] : r.periods) {
    json arr = json::array();
    for (const auto& w : ws)
      arr.push_back({{"x", scalar_str(w.x)}, {"orientation", w.orientation}});
    periods[std::to_string(m)] = arr;
  }
  j["periods"] = periods;
  return j;
}

json to_json(const lift_certificate& c) {
  json j;
  switch (c.status) {
    case lift_status::certified:
      j["status"] = "CertifiedLift";
      break;
    case lift_status::no_lift:
      j["status"] = "NoLift";
      break;
    case lift_status::inconclusive:
      j["status"] = "Inconclusive";
      break;
  }
  j["N"] = c.grace;
  j["nodes"] = c.nodes_explored;
  json arr = json::array();
  for (const auto& y : c.lift) arr.push_back(scalar_str(y));
  j["lift"] = arr;
  return j;
}

std::string cutting_csv(const cutting_data& cd) {
  std::ostringstream os;
  os << "k,S,Q,Shat,Qhat\n";
  size_t rows = std::max(cd.S.size(), cd.Shat.size());
  for (size_t k = 0; k < rows; ++k) {
    os << k << ",";
    if (k < cd.S.size()) os << cd.S[k];
    os << ",";
    if (k < cd.Q.size()) os << cd.Q[k];
    os << ",";
    if (k < cd.Shat.size()) os << cd.Shat[k];
    os << ",";
    if (k < cd.Qhat.size()) os << cd.Qhat[k];
    os << "\n";
  }
  return os.str();
}

std::string complexity_csv(const std::vector<size_t>& p) {
  std::ostringstream os;
  os << "length,factors\n";
  for (size_t i = 0; i < p.size(); ++i) os << (i + 1) << "," << p[i] << "\n";
  return os.str();
}

std::string sweep_csv(const std::vector<sweep_row>& rows) {
  std::ostringstream os;
  os << "lambda,nu_prefix,cutting_times,sup_Q,alpha_est,alpha_half_width,cutting_status,"
        "cut_alpha,height,phi_periods,psi_periods,phi_closure,psi_closure\n";
  auto join = [](const std::vector<size_t>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(v[i]);
    }
    return s;
  };
  for (const auto& r : rows) {
    os << rational_str(r.lambda) << "," << r.nu_prefix << "," << join(r.cutting_times) << ","
       << r.sup_q << "," << rational_str(r.alpha_est) << "," << rational_str(r.alpha_half_width)
       << "," << r.cutting_status << "," << interval_str(r.cut_alpha_lo, r.cut_alpha_hi) << ","
       << interval_str(r.height_lo, r.height_hi) << "," << join(r.phi_periods) << ","
       << join(r.psi_periods) << "," << (r.phi_closure_ok ? 1 : 0) << ","
       << (r.psi_closure_ok ? 1 : 0) << "\n";
  }
  return os.str();
}

} // namespace lorenz
