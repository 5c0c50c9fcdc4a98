#include "peakon/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace peakon {

namespace {

double sup_state_distance(const Trajectory& a, const Trajectory& b, double s,
                          bool u_and_v_only) {
  const size_t n = std::min(a.states.size(), b.states.size());
  double sup = 0.0;
  for (size_t i = 0; i < n; ++i) {
    double d = sobolev_norm(a.states[i].u - b.states[i].u, s) +
               sobolev_norm(a.states[i].v - b.states[i].v, s);
    if (!u_and_v_only) {
      d += sobolev_norm(a.states[i].w - b.states[i].w, s) +
           sobolev_norm(a.states[i].z - b.states[i].z, s);
    }
    sup = std::max(sup, d);
  }
  return sup;
}

bool decreasing_with_slack(const std::vector<double>& v, double slack) {
  for (size_t i = 1; i < v.size(); ++i) {
    if (v[i] > (1.0 + slack) * v[i - 1]) return false;
  }
  return true;
}

}  // namespace

double fit_log_slope(const std::vector<double>& deltas, const std::vector<double>& dists) {
  std::vector<double> xs, ys;
  for (size_t i = 0; i < deltas.size() && i < dists.size(); ++i) {
    if (deltas[i] > 0.0 && dists[i] > 0.0) {
      xs.push_back(std::log(deltas[i]));
      ys.push_back(std::log(dists[i]));
    }
  }
  if (xs.size() < 3) {
    throw std::invalid_argument("fit_log_slope: need >= 3 positive (delta, distance) pairs");
  }
  double mx = 0.0, my = 0.0;
  for (size_t i = 0; i < xs.size(); ++i) { mx += xs[i]; my += ys[i]; }
  mx /= xs.size();
  my /= ys.size();
  double num = 0.0, den = 0.0;
  for (size_t i = 0; i < xs.size(); ++i) {
    num += (xs[i] - mx) * (ys[i] - my);
    den += (xs[i] - mx) * (xs[i] - mx);
  }
  return num / den;
}

Field sweep_bump(const PeriodicGrid& grid, double target_norm, double norm_index) {
  Field shape = Field::harmonic(grid, 3, 1.0, 0.0) + Field::harmonic(grid, 5, 0.0, 1.0);
  const double base = sobolev_norm(shape, norm_index);
  return (target_norm / base) * shape;
}

SweepResult holder_sweep(const Field& base_u0, const Field& base_v0, const SweepConfig& cfg) {
  require_same_grid(base_u0, base_v0, "holder_sweep");
  int nonzero = 0;
  for (double d : cfg.deltas) {
    if (d > 0.0) ++nonzero;
  }
  if (nonzero < 3) {
    throw std::invalid_argument("holder_sweep: need >= 3 positive deltas for the fit");
  }

  const RegionResult region = cfg.mu_mode ? classify_mu(cfg.s, cfg.x, cfg.eps_region)
                                          : classify_gamma(cfg.s, cfg.x, cfg.eps_region);

  SweepResult res;
  res.region_id = region.region_id;
  res.predicted_exponent = region.exponent;

  // perturbation size delta is measured in H^r (gamma) or H^{p+1} (mu)
  const double pert_index = cfg.mu_mode ? cfg.x + 1.0 : cfg.x;

  // every leg's data must lie in the rho-ball; when rho is not declared,
  // derive it from the largest leg
  const double nu = sobolev_norm(base_u0, cfg.s);
  const double nv = sobolev_norm(base_v0, cfg.s);
  double data_sup = std::max(nu, nv);
  for (double delta : cfg.deltas) {
    if (delta > 0.0) {
      const Field pert = sweep_bump(base_u0.grid(), delta, pert_index);
      data_sup = std::max(data_sup, sobolev_norm(base_u0 + pert, cfg.s));
    }
  }
  const double rho = cfg.rho > 0.0 ? cfg.rho : 1.05 * data_sup;
  if (data_sup > rho) {
    throw std::invalid_argument("holder_sweep: data exceeds the declared rho");
  }
  res.rho = rho;

  const double c_s = cfg.c_s > 0.0 ? cfg.c_s : calibrated_cs();
  const double horizon = 0.5 * lifespan_rho(rho, c_s, cfg.delta0);
  res.horizon = horizon;

  SolveConfig run;
  run.s = cfg.s;
  run.delta0 = cfg.delta0;
  run.c_s = c_s;
  run.n_points = base_u0.size();
  run.record_every = cfg.record_every;
  run.t_final = horizon;
  run.dt = auto_dt(base_u0, base_v0, cfg.cfl);  // one dt for every leg
  run.allow_beyond_lifespan = true;             // guarded by T_{rho,delta0} instead

  const Trajectory base = solve(base_u0, base_v0, run);
  if (base.blew_up) {
    res.aborted = true;
    return res;
  }

  for (double delta : cfg.deltas) {
    if (delta == 0.0) {
      res.deltas.push_back(0.0);
      res.distances.push_back(0.0);  // identical data, identical trajectory
      continue;
    }
    const Field pert = sweep_bump(base_u0.grid(), delta, pert_index);
    const Trajectory leg = solve(base_u0 + pert, base_v0, run);
    if (leg.blew_up) {
      res.aborted = true;
      return res;
    }
    double dist = 0.0;
    if (cfg.mu_mode) {
      const size_t n = std::min(leg.states.size(), base.states.size());
      for (size_t i = 0; i < n; ++i) {
        const State da = reformulated_rhs(leg.states[i]);
        const State db = reformulated_rhs(base.states[i]);
        dist = std::max(dist, sobolev_norm(da.u - db.u, cfg.x) +
                                  sobolev_norm(da.v - db.v, cfg.x));
      }
    } else {
      dist = sup_state_distance(leg, base, cfg.x, /*u_and_v_only=*/true);
    }
    res.deltas.push_back(delta);
    res.distances.push_back(dist);
    ++res.completed_legs;
  }

  res.fitted_slope = fit_log_slope(res.deltas, res.distances);
  return res;
}

ContinuityReport continuity_experiment(const Field& u0, const Field& v0,
                                       const std::vector<double>& sizes,
                                       const SolveConfig& cfg) {
  for (size_t i = 1; i < sizes.size(); ++i) {
    if (!(sizes[i] < sizes[i - 1]) || !(sizes[i] > 0.0)) {
      throw std::invalid_argument(
          "continuity_experiment: perturbation sizes must decrease strictly to 0");
    }
  }
  SolveConfig run = cfg;
  run.dt = run.dt > 0.0 ? run.dt : auto_dt(u0, v0, cfg.cfl);

  ContinuityReport rep;
  const Trajectory base = solve(u0, v0, run);
  if (base.blew_up) {
    rep.aborted = true;
    return rep;
  }
  for (double size : sizes) {
    const Field pert = sweep_bump(u0.grid(), size, cfg.s);
    const Trajectory leg = solve(u0 + pert, v0, run);
    if (leg.blew_up) {
      rep.aborted = true;
      return rep;
    }
    double d0 = sup_state_distance(leg, base, cfg.s, /*u_and_v_only=*/true);
    double d1 = 0.0;
    const size_t n = std::min(leg.states.size(), base.states.size());
    for (size_t i = 0; i < n; ++i) {
      const State da = reformulated_rhs(leg.states[i]);
      const State db = reformulated_rhs(base.states[i]);
      d1 = std::max(d1, sobolev_norm(da.u - db.u, cfg.s - 1.0) +
                            sobolev_norm(da.v - db.v, cfg.s - 1.0));
    }
    rep.sizes.push_back(size);
    rep.sup_dist.push_back(d0);
    rep.sup_dist_c1.push_back(d1);
  }
  rep.monotone = decreasing_with_slack(rep.sup_dist, 0.1) &&
                 decreasing_with_slack(rep.sup_dist_c1, 0.1);
  return rep;
}

PtSymmetryReport pt_symmetry_check(const Field& u0, const SolveConfig& cfg) {
  const Field v0 = reflect(u0);
  SolveConfig fwd = cfg;
  fwd.dt = fwd.dt > 0.0 ? fwd.dt : auto_dt(u0, v0, cfg.cfl);
  SolveConfig bwd = fwd;
  bwd.t_final = -fwd.t_final;

  PtSymmetryReport rep;
  rep.data_norm = sobolev_norm(u0, cfg.s) + sobolev_norm(v0, cfg.s);

  const Trajectory f = solve(u0, v0, fwd);
  const Trajectory b = solve(u0, v0, bwd);
  if (f.blew_up || b.blew_up) {
    rep.aborted = true;
    return rep;
  }
  const size_t n = std::min(f.states.size(), b.states.size());
  for (size_t i = 0; i < n; ++i) {
    const double res =
        sobolev_norm(f.states[i].v - reflect(b.states[i].u), cfg.s - 1.0);
    rep.times.push_back(f.times[i]);
    rep.residuals.push_back(res);
    rep.max_residual = std::max(rep.max_residual, res);
  }
  return rep;
}

MollifierConvergenceReport mollifier_convergence_study(const Field& u0, const Field& v0,
                                                       const std::vector<double>& eps_list,
                                                       const SolveConfig& cfg) {
  for (size_t i = 1; i < eps_list.size(); ++i) {
    if (!(eps_list[i] < eps_list[i - 1])) {
      throw std::invalid_argument("mollifier_convergence_study: eps must decrease strictly");
    }
  }
  SolveConfig run = cfg;
  run.eps = 0.0;
  run.dt = run.dt > 0.0 ? run.dt : auto_dt(u0, v0, cfg.cfl);

  MollifierConvergenceReport rep;
  const Trajectory base = solve(u0, v0, run);
  if (base.blew_up) {
    rep.aborted = true;
    return rep;
  }
  for (double eps : eps_list) {
    SolveConfig leg_cfg = run;
    leg_cfg.eps = eps;
    const Trajectory leg = solve(u0, v0, leg_cfg);
    if (leg.blew_up) {
      rep.aborted = true;
      return rep;
    }
    rep.eps_values.push_back(eps);
    rep.gaps.push_back(sup_state_distance(leg, base, cfg.s - 1.0, /*u_and_v_only=*/false));
  }
  rep.monotone = decreasing_with_slack(rep.gaps, 0.1);
  return rep;
}

}  // namespace peakon
