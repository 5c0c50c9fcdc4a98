#pragma once

#include "peakon/integrator.hpp"
#include "peakon/regions.hpp"

namespace peakon {

// Empirical counterparts of the continuity and Hölder-stability statements.
// Sweep legs share one step size, resolved once from the base data, so that
// trajectories can be compared at matching record times.

struct SweepConfig {
  double s = 3.0;
  double x = 1.0;               // r (gamma mode) or p (mu mode)
  bool mu_mode = false;         // measure d/dt distances in H^p instead
  double rho = 0.0;             // declared data-size bound; 0 = derive from data
  double delta0 = 0.5;
  double c_s = 0.0;             // 0 = calibrated default
  double eps_region = -1.0;     // eps0/eps1 for the exponent prediction
  std::vector<double> deltas;   // perturbation sizes, >= 3 nonzero values
  int record_every = 1;
  double cfl = 0.3;
};

struct SweepResult {
  std::vector<double> deltas;
  std::vector<double> distances;   // sup over recorded times, one per delta
  double fitted_slope = 0.0;
  double predicted_exponent = 0.0;
  std::string region_id;
  double rho = 0.0;
  double horizon = 0.0;            // T_{rho,delta0}/2 actually integrated
  bool aborted = false;            // blow-up in some leg; partial data kept
  int completed_legs = 0;
};

// Fixed-shape perturbation cos(3x) + sin(5x) rescaled to the requested norm.
Field sweep_bump(const PeriodicGrid& grid, double target_norm, double norm_index);

SweepResult holder_sweep(const Field& base_u0, const Field& base_v0, const SweepConfig& cfg);

struct ContinuityReport {
  std::vector<double> sizes;        // perturbation sizes in H^s
  std::vector<double> sup_dist;     // sup-in-time C(I,H^s) distances
  std::vector<double> sup_dist_c1;  // sup-in-time C^1(I,H^{s-1}) distances
  bool monotone = false;            // both columns decrease (10% slack)
  bool aborted = false;
};

ContinuityReport continuity_experiment(const Field& u0, const Field& v0,
                                       const std::vector<double>& sizes, const SolveConfig& cfg);

struct PtSymmetryReport {
  std::vector<double> times;      // positive record times
  std::vector<double> residuals;  // ||v(x,t) - u(-x,-t)||_{H^{s-1}} per time
  double max_residual = 0.0;
  double data_norm = 0.0;         // ||u0||_{H^s} + ||v0||_{H^s}
  bool aborted = false;
};

// Runs the nonlocal reduction witness: v0(x) = u0(-x), forward and backward.
PtSymmetryReport pt_symmetry_check(const Field& u0, const SolveConfig& cfg);

struct MollifierConvergenceReport {
  std::vector<double> eps_values;
  std::vector<double> gaps;      // sup-in-time ||sol_eps - sol||_{H^{s-1}}
  bool monotone = false;         // strictly decreasing with 10% slack
  bool aborted = false;
};

MollifierConvergenceReport mollifier_convergence_study(const Field& u0, const Field& v0,
                                                       const std::vector<double>& eps_list,
                                                       const SolveConfig& cfg);

// Least-squares slope of log(dist) against log(delta); zero entries skipped.
double fit_log_slope(const std::vector<double>& deltas, const std::vector<double>& dists);

}  // namespace peakon
