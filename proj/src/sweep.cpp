#include "lorenz/sweep.hpp"

#include "lorenz/kneading.hpp"
#include "lorenz/maps.hpp"
#include "lorenz/outside.hpp"
#include "lorenz/periodic.hpp"
#include "lorenz/rotation.hpp"
#include "lorenz/symbolic.hpp"

namespace lorenz {

bool sweep_row::operator==(const sweep_row& o) const {
  return lambda == o.lambda && nu_prefix == o.nu_prefix && cutting_times == o.cutting_times &&
         sup_q == o.sup_q && alpha_est == o.alpha_est && alpha_half_width == o.alpha_half_width &&
         cutting_status == o.cutting_status && cut_alpha_lo == o.cut_alpha_lo &&
         cut_alpha_hi == o.cut_alpha_hi && height_lo == o.height_lo && height_hi == o.height_hi &&
         phi_periods == o.phi_periods && psi_periods == o.psi_periods &&
         phi_closure_ok == o.phi_closure_ok && psi_closure_ok == o.psi_closure_ok;
}

std::vector<rational> sweep_grid(const sweep_config& cfg) {
  std::vector<rational> grid;
  if (cfg.steps == 0) return grid;
  if (cfg.steps == 1) {
    grid.push_back(cfg.from);
    return grid;
  }
  rational span = cfg.to - cfg.from;
  for (size_t i = 0; i < cfg.steps; ++i) {
    rational t(static_cast<unsigned long>(i), static_cast<unsigned long>(cfg.steps - 1));
    t.canonicalize();
    rational v = cfg.from + span * t;
    v.canonicalize();
    grid.push_back(v);
  }
  return grid;
}

sweep_row sweep_cell(const rational& lambda, const sweep_config& cfg) {
  sweep_row row;
  row.lambda = lambda;
  exact_scalar lam{lambda};
  map_spec f = make_family("tent-symmetric", lam);

  symbol_seq nu = kneading_sequence(f, cfg.kneading_depth);
  {
    auto w = nu.take(std::min<size_t>(24, cfg.kneading_depth));
    for (uint8_t b : w) row.nu_prefix += b ? '1' : '0';
  }
  cutting_data cd = cutting_data_symbolic(nu, cfg.kneading_depth);
  row.cutting_times.assign(cd.S.begin(),
                           cd.S.begin() + std::min<size_t>(cd.S.size(), 10));
  row.sup_q = cd.sup_Q();

  if (cfg.with_rotation) {
    map_spec bar = stunted_circle_map(lam);
    rotation_estimate est = rotation_number_counting(bar, bar.plateau->value, cfg.counting_n);
    row.alpha_est = est.value;
    row.alpha_half_width = est.half_width;
    symbol_seq nu_deep = kneading_sequence(f, cfg.cutting_depth);
    try {
      rotation_result rr = rotation_number_cutting(nu_deep, cfg.cutting_depth);
      row.cutting_status = rr.exact() ? "ExactHit" : "NoHitUpToDepth";
      row.cut_alpha_lo = rr.alpha_lo;
      row.cut_alpha_hi = rr.alpha_hi;
      row.height_lo = rr.prime_end_lo();
      row.height_hi = rr.prime_end_hi();
    } catch (const depth_exceeded&) {
      row.cutting_status = "DepthExceeded";
    }
  }

  if (cfg.with_periods) {
    map_spec phi = derive_increasing_lorenz(f);
    map_spec psi = derive_decreasing_lorenz(f);
    period_report rp = enumerate_periods(phi, cfg.periods_n);
    period_report rq = enumerate_periods(psi, cfg.periods_n);
    row.phi_periods = rp.present();
    row.psi_periods = rq.present();
    row.phi_closure_ok = verify_sharkovsky_closure(rp, closure_mode::increasing_lorenz).pass;
    row.psi_closure_ok = verify_sharkovsky_closure(rq, closure_mode::decreasing_lorenz).pass;
  }
  return row;
}

std::vector<sweep_row> sweep_serial(const sweep_config& cfg) {
  std::vector<rational> grid = sweep_grid(cfg);
  std::vector<sweep_row> rows(grid.size());
  for (size_t i = 0; i < grid.size(); ++i) rows[i] = sweep_cell(grid[i], cfg);
  return rows;
}

std::vector<sweep_row> sweep_parallel(const sweep_config& cfg) {
  std::vector<rational> grid = sweep_grid(cfg);
  std::vector<sweep_row> rows(grid.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(grid.size()); ++i)
    rows[static_cast<size_t>(i)] = sweep_cell(grid[static_cast<size_t>(i)], cfg);
  return rows;
}

} // namespace lorenz
