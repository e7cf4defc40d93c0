// Command-line surface: single computations, sweeps, the verification
// suite, and report emission.  Exit codes: 0 ok, 1 failed verification,
// 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "lorenz/accept.hpp"
#include "lorenz/io.hpp"
#include "lorenz/sturmian.hpp"

namespace {

using namespace lorenz;

std::ostream& out_stream(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw error("cannot open output file " + path);
  return file;
}

map_spec build_family(const std::string& family, const std::string& param) {
  return make_family(family, exact_scalar::parse(param));
}

int cmd_kneading(const std::string& family, const std::string& param, size_t depth,
                 const std::string& format, std::ostream& os) {
  map_spec f = build_family(family, param);
  symbol_seq nu = kneading_sequence(f, depth);
  cutting_data cd = cutting_data_symbolic(nu, depth);
  if (format == "csv") {
    os << cutting_csv(cd);
  } else if (format == "json") {
    json j = to_json(cd);
    j["nu"] = nu.infinite() ? nu.to_string() : symbol_seq::finite(nu.take(depth)).to_string();
    j["map"] = to_json(f);
    os << j.dump(2) << "\n";
  } else {
    os << "nu      = " << nu.to_string() << "\n";
    os << "S       =";
    for (size_t s : cd.S) os << " " << s;
    os << "\nQ       =";
    for (size_t q : cd.Q) os << " " << q;
    os << "\nShat    =";
    for (size_t s : cd.Shat) os << " " << s;
    os << "\nQhat    =";
    for (size_t q : cd.Qhat) os << " " << q;
    os << "\nkappa   = " << (cd.kappa ? std::to_string(*cd.kappa) : "none") << "\n";
    long_branched_result lb = is_long_branched(cd, nu.infinite());
    os << "long-branched: "
       << (lb.status == lb_status::yes ? "yes" : lb.status == lb_status::no ? "no" : "unknown")
       << " (sup Q = " << lb.sup_q << " at depth " << lb.depth << ")\n";
  }
  return 0;
}

int cmd_rotation(const std::string& family, const std::string& param, size_t n, size_t depth,
                 const std::string& format, std::ostream& os) {
  exact_scalar lam = exact_scalar::parse(param);
  map_spec f = build_family(family, param);
  symbol_seq nu = kneading_sequence(f, std::max<size_t>(2 * depth + 64, 128));
  map_spec bar = stunted_circle_map(lam);
  rotation_estimate est = rotation_number_counting(bar, bar.plateau->value, n);
  rotation_result cut = rotation_number_cutting(nu, depth);
  if (format == "json") {
    json j;
    j["counting"] = to_json(est);
    j["cutting"] = to_json(cut);
    height_result h = height(nu, depth);
    j["height"] = h.exact ? json(rational_str(h.lo))
                          : json::array({rational_str(h.lo), rational_str(h.hi)});
    os << j.dump(2) << "\n";
  } else {
    os << "counting: " << rational_str(est.value) << " +- " << rational_str(est.half_width)
       << "  (" << est.ones << "/" << est.n << ")\n";
    os << "cutting:  " << (cut.exact() ? "ExactHit " : "NoHitUpToDepth ")
       << rational_str(cut.alpha_lo);
    if (!cut.exact()) os << ".." << rational_str(cut.alpha_hi);
    if (cut.S_K) os << "  (K = " << *cut.K << ", S_K = " << *cut.S_K << ")";
    os << "\nprime end: " << rational_str(cut.prime_end_lo());
    if (!cut.exact()) os << ".." << rational_str(cut.prime_end_hi());
    os << "\n";
  }
  return 0;
}

int cmd_periods(const std::string& family, const std::string& param, size_t N,
                const std::string& format, std::ostream& os) {
  map_spec f = build_family(family, param);
  map_spec phi = derive_increasing_lorenz(f);
  map_spec psi = derive_decreasing_lorenz(f);
  int rc = 0;
  json all = json::object();
  for (auto [name, g, mode] :
       {std::tuple<const char*, const map_spec*, closure_mode>{"f", &f, closure_mode::unimodal},
        {"phi", &phi, closure_mode::increasing_lorenz},
        {"psi", &psi, closure_mode::decreasing_lorenz}}) {
    period_report rep = enumerate_periods(*g, N);
    closure_verdict v = verify_sharkovsky_closure(rep, mode);
    if (!v.pass) rc = 1;
    if (format == "json") {
      json j = to_json(rep);
      j["closure_ok"] = v.pass;
      all[name] = j;
    } else {
      os << name << ": periods {";
      bool first = true;
      for (size_t m : rep.present()) {
        if (!first) os << ", ";
        os << m;
        first = false;
      }
      os << "} closure " << (v.pass ? "ok" : "VIOLATED") << "\n";
    }
  }
  if (format == "json") os << all.dump(2) << "\n";
  return rc;
}

int cmd_ostrowski(const std::string& cf_str, size_t N, std::ostream& os) {
  continued_fraction cf = continued_fraction::parse(cf_str);
  auto S = ostrowski_cutting_times(cf, N);
  for (size_t i = 0; i < S.size(); ++i) os << (i ? " " : "") << S[i];
  os << "\n";
  return 0;
}

int cmd_denjoy(const std::string& cf_str, size_t N, const std::string& format,
               std::ostream& os) {
  continued_fraction cf = continued_fraction::parse(cf_str);
  symbol_seq nu = kneading_from_cf_denjoy(cf, N);
  cutting_data cd = cutting_data_symbolic(nu, N);
  symbol_seq nuphi = lorenz_recode(nu, N);
  bool balanced = is_balanced(symbol_seq::finite(nuphi.take(N)), 20);
  if (format == "json") {
    json j;
    j["nu"] = symbol_seq::finite(nu.take(N)).to_string();
    j["nu_phi"] = symbol_seq::finite(nuphi.take(N)).to_string();
    j["cutting"] = to_json(cd);
    j["nu_phi_balanced"] = balanced;
    os << j.dump(2) << "\n";
  } else {
    os << "nu     = " << symbol_seq::finite(nu.take(N)).to_string() << "\n";
    os << "nu^phi = " << symbol_seq::finite(nuphi.take(N)).to_string() << "\n";
    os << "S      =";
    for (size_t s : cd.S) os << " " << s;
    os << "\nShat   =";
    for (size_t s : cd.Shat) os << " " << s;
    os << "\nsup Q  = " << cd.sup_Q() << "\n";
    os << "nu^phi balanced (maxlen 20): " << (balanced ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_sturmian(const std::string& alpha_str, const std::string& beta_str, size_t n,
                 size_t maxlen, const std::string& format, std::ostream& os) {
  exact_scalar alpha = exact_scalar::parse(alpha_str);
  exact_scalar beta = exact_scalar::parse(beta_str);
  rotational_word w = rotational_sequence(alpha, beta, n);
  bool balanced = is_balanced(w.word, maxlen);
  if (format == "csv") {
    auto p = factor_complexity(w.word, maxlen);
    os << complexity_csv(p);
    return 0;
  }
  os << "word = " << w.word.to_string() << "\n";
  if (w.boundary_hit) {
    os << "boundary hit at n = " << *w.boundary_hit << "\n";
    os << "lower = " << w.lower->to_string() << "\n";
    os << "upper = " << w.upper->to_string() << "\n";
  }
  os << "balanced up to " << maxlen << ": " << (balanced ? "yes" : "no") << "\n";
  if (w.word.prefix.size() >= 10 * maxlen) {
    auto p = factor_complexity(w.word, maxlen);
    os << "complexity:";
    for (size_t v : p) os << " " << v;
    os << "\n";
  }
  return 0;
}

int cmd_access(const std::string& param, const std::string& orbit_str, size_t N_max,
               const std::string& format, std::ostream& os) {
  exact_scalar lam = exact_scalar::parse(param);
  map_spec core = make_family("tent-core", lam);
  std::vector<exact_scalar> pts;
  std::string tok;
  for (char ch : orbit_str + ",") {
    if (ch == ',') {
      if (!tok.empty()) pts.push_back(exact_scalar::parse(tok));
      tok.clear();
    } else {
      tok += ch;
    }
  }
  backward_orbit orb = backward_orbit::make(core, pts);
  lift_certificate best;
  best.status = lift_status::no_lift;
  size_t best_n = 0;
  for (size_t N = 0; N <= N_max && N < pts.size(); ++N) {
    lift_certificate cert = accessibility_certificate(orb, N);
    if (cert.status == lift_status::certified) {
      best = cert;
      best_n = N;
      break;
    }
    if (cert.status == lift_status::inconclusive) best = cert;
  }
  if (format == "json") {
    json j = to_json(best);
    j["least_N"] = best.status == lift_status::certified ? json(best_n) : json(nullptr);
    os << j.dump(2) << "\n";
  } else {
    switch (best.status) {
      case lift_status::certified:
        os << "CertifiedLift at N = " << best_n << " (" << best.nodes_explored << " nodes)\n";
        for (const auto& y : best.lift) os << "  y = " << scalar_str(y) << "\n";
        break;
      case lift_status::no_lift:
        os << "NoLift up to N = " << N_max << "\n";
        break;
      case lift_status::inconclusive:
        os << "Inconclusive (precision exhausted)\n";
        break;
    }
  }
  return 0;
}

int cmd_verify(const std::string& suite, std::ostream& os) {
  auto results = run_acceptance(suite);
  bool all = true;
  for (const auto& r : results) {
    os << (r.pass ? "PASS" : "FAIL") << "  criterion " << r.id << ": " << r.name;
    if (!r.detail.empty()) os << "  [" << r.detail << "]";
    os << "  (" << r.ms << " ms)\n";
    all = all && r.pass;
  }
  os << (all ? "all criteria passed" : "SOME CRITERIA FAILED") << "\n";
  return all ? 0 : 1;
}

int cmd_sweep(const std::string& from, const std::string& to, size_t steps, size_t N,
              size_t n, bool serial, std::ostream& os) {
  sweep_config cfg;
  cfg.from = exact_scalar::parse(from).rat();
  cfg.to = exact_scalar::parse(to).rat();
  cfg.steps = steps;
  cfg.periods_n = N;
  cfg.counting_n = n;
  auto rows = serial ? sweep_serial(cfg) : sweep_parallel(cfg);
  os << sweep_csv(rows);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lorenz maps derived from unimodal maps: kneading, rotation, "
               "Sharkovsky and accessibility toolkit"};
  app.require_subcommand(1);

  std::string family = "tent-symmetric", param = "2", format = "text", output;
  std::string cf_str, orbit_str, alpha_str, beta_str = "0", suite = "all";
  std::string from = "29/20", to = "2";
  size_t depth = 64, n = 10000, N = 6, maxlen = 20, steps = 10, nmax = 8;
  bool serial = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text | json | csv");
    sub->add_option("--output", output, "write the report to a file");
  };

  auto* kn = app.add_subcommand("kneading", "kneading sequence and cutting data");
  kn->add_option("--family", family);
  kn->add_option("--param", param);
  kn->add_option("--depth", depth);
  add_common(kn);

  auto* rot = app.add_subcommand("rotation", "rotation number by counting and cutting times");
  rot->add_option("--family", family);
  rot->add_option("--param", param);
  rot->add_option("--n", n);
  rot->add_option("--depth", depth);
  add_common(rot);

  auto* per = app.add_subcommand("periods", "periodic orbits and Sharkovsky verdicts");
  per->add_option("--family", family);
  per->add_option("--param", param);
  per->add_option("--N", N);
  add_common(per);

  auto* ost = app.add_subcommand("ostrowski", "cutting times from a continued fraction");
  ost->add_option("--cf", cf_str)->required();
  ost->add_option("--N", N);
  add_common(ost);

  auto* den = app.add_subcommand("denjoy", "Denjoy-case kneading generator");
  den->add_option("--cf", cf_str)->required();
  den->add_option("--N", N);
  add_common(den);

  auto* stu = app.add_subcommand("sturmian", "rotational words and Sturmian proxies");
  stu->add_option("--alpha", alpha_str)->required();
  stu->add_option("--beta", beta_str);
  stu->add_option("--n", n);
  stu->add_option("--maxlen", maxlen);
  add_common(stu);

  auto* acc = app.add_subcommand("access", "accessibility certificate for a backward orbit");
  acc->add_option("--param", param);
  acc->add_option("--orbit", orbit_str)->required();
  acc->add_option("--N", nmax, "largest grace index to try");
  add_common(acc);

  auto* ver = app.add_subcommand("verify", "run the acceptance suite");
  ver->add_option("--suite", suite, "all | paper-tables");
  add_common(ver);

  auto* sw = app.add_subcommand("sweep", "CSV sweep over tent slopes");
  sw->add_option("--from", from);
  sw->add_option("--to", to);
  sw->add_option("--steps", steps);
  sw->add_option("--N", N);
  sw->add_option("--n", n);
  sw->add_flag("--serial", serial, "use the serial engine");
  add_common(sw);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e); // --help
    app.exit(e);
    return 2;
  }

  try {
    std::ofstream file;
    std::ostream& os = out_stream(file, output);
    if (kn->parsed()) return cmd_kneading(family, param, depth, format, os);
    if (rot->parsed()) return cmd_rotation(family, param, n, depth, format, os);
    if (per->parsed()) return cmd_periods(family, param, N, format, os);
    if (ost->parsed()) return cmd_ostrowski(cf_str, N, os);
    if (den->parsed()) return cmd_denjoy(cf_str, N, format, os);
    if (stu->parsed()) return cmd_sturmian(alpha_str, beta_str, n, maxlen, format, os);
    if (acc->parsed()) return cmd_access(param, orbit_str, nmax, format, os);
    if (ver->parsed()) return cmd_verify(suite, os);
    if (sw->parsed()) return cmd_sweep(from, to, steps, N, n, serial, os);
  } catch (const lorenz::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
