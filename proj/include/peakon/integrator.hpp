#pragma once

#include <limits>
#include <stdexcept>
#include <vector>

#include "peakon/systems.hpp"

namespace peakon {

// Signalled when a step produces non-finite fields or the solution norm
// escapes the size-estimate corridor.
class BlowupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolveConfig {
  double s = 3.0;          // Sobolev index for diagnostics and guards
  double delta0 = 0.5;     // lifespan margin, in (0,1)
  double c_s = 0.0;        // energy constant; 0 = use the calibrated default
  double eps = 0.0;        // mollification; 0 = unmollified system
  double dt = 0.0;         // step size; 0 = CFL rule from initial data
  double t_final = 0.0;    // sign selects the integration direction
  int n_points = 128;
  int record_every = 1;
  double cfl = 0.3;
  bool allow_beyond_lifespan = false;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<State> states;          // thinned by record_every; last step always kept
  std::vector<double> norm_u;         // ||u||_{H^s}
  std::vector<double> norm_v;         // ||v||_{H^s}
  std::vector<double> norm_uv_pair;   // ||(U,V)||_{H^{s-1}}
  std::vector<double> h1;
  std::vector<double> h2;
  std::vector<double> consistency;    // ||w - u_x||_{H^{s-2}} + ||z - v_x||_{H^{s-2}}
  double dt_used = 0.0;
  double sobolev_index = 0.0;
  bool blew_up = false;
  double blowup_time = 0.0;
};

// T_{delta0} = (1 - delta0) / (8 C_s (||u0|| + ||v0||)^2). Zero data gives the
// +infinity sentinel.
double lifespan(double u0_norm, double v0_norm, double c_s, double delta0);

// Ball variant for data bounded by rho: T_{rho,delta0} = (1 - delta0) / (32 C_s rho^2).
double lifespan_rho(double rho, double c_s, double delta0);

// One classical RK4 step of the reformulated (eps = 0) or mollified (eps > 0)
// system. Throws BlowupError on non-finite output. dt may be negative.
State rk4_step(const State& st, double dt, double eps);

// CFL step size: cfl * dx / (1 + max |(u-w)(v+z)|).
double auto_dt(const Field& u0, const Field& v0, double cfl = 0.3);

// Method-of-lines integration with on-line diagnostics. Blow-up yields a
// partial trajectory with blew_up set instead of throwing.
Trajectory solve(const Field& u0, const Field& v0, const SolveConfig& cfg);

struct SizeEstimateReport {
  bool pass = false;
  double max_ratio = 0.0;   // sup_t (||u||+||v||) / bound
  double bound = 0.0;       // (2/sqrt(delta0)) (||u0||+||v0||)
};

SizeEstimateReport size_estimate_check(const Trajectory& traj, const SolveConfig& cfg);

struct EnergyRatioReport {
  bool defined = false;
  double sup_ratio_u = 0.0;   // sup |d/dt ||U|| | / (||U||^2 ||V||)
  double sup_ratio_v = 0.0;   // sup |d/dt ||V|| | / (||U|| ||V||^2)
  double supremum = 0.0;      // max of the two
};

// Central-difference estimate of the energy-inequality constants along a
// trajectory; the supremum is the empirical C_s used to calibrate lifespans.
EnergyRatioReport energy_ratio_monitor(const Trajectory& traj);

// 2x the supremum reported by energy_ratio_monitor on the standard smooth run
// (u0 = v0 = 0.3 cos x + 0.1 sin 2x, n = 128, s = 3). Computed once, cached.
double calibrated_cs();

inline constexpr double kInfiniteLifespan = std::numeric_limits<double>::infinity();

}  // namespace peakon
