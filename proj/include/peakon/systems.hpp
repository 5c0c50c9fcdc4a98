#pragma once

#include <utility>

#include "peakon/spectral.hpp"

namespace peakon {

// The evolved quadruple (u, w, v, z) of the first-order reformulation.
// w = du/dx and z = dv/dx hold for data prepared by the solver and propagate
// along solutions; the residual is monitored, not enforced.
struct State {
  Field u, w, v, z;

  State(Field u_, Field w_, Field v_, Field z_);

  const PeriodicGrid& grid() const { return u.grid(); }
  static State zeros(const PeriodicGrid& g);
  // w, z formed spectrally from u0, v0
  static State from_data(const Field& u0, const Field& v0);

  bool all_finite() const;
  // ||u||_{H^s} + ||w||_{H^s} + ||v||_{H^s} + ||z||_{H^s}
  double pair_norm(double s) const;
};

State operator+(State a, const State& b);
State operator-(State a, const State& b);
State operator*(double a, State st);

// m = u - u_xx, n = v - v_xx
struct Momentum {
  Field m, n;
};

Momentum momentum_from_state(const State& st);

// Conservative form: returns (dm/dt, dn/dt) = d/dx [ (m|n) (u-w)(v+z) ].
std::pair<Field, Field> conservative_rhs(const Momentum& mom, const State& st);

// First-order reformulation with nonlocal terms F, G, F^, G^ realized as
// D^{-2} / D^{-2} d/dx Fourier multipliers.
State reformulated_rhs(const State& st);

// Mollified system: J_eps applied to products of mollified factors exactly
// where the system prints them; reduces to reformulated_rhs as eps -> 0.
State mollified_rhs(const State& st, double eps);

// The curly-bracket combinations of the w/z equations and the B, B^ blocks
// of the nonlocal terms. All four vanish identically under the FORQ
// reduction v = u, z = w.
struct ReductionTerms {
  Field curly_w, curly_z, b, b_hat;
};

ReductionTerms forq_reduction_terms(const State& st);

// H1 = int m (v+z) dx, H2 = (1/2) int (u-w)^2 (v+z) n dx, rectangle rule.
double hamiltonian_h1(const State& st);
double hamiltonian_h2(const State& st);

// mKdV-hierarchy pair: d/dt mt = -mt''' - 6 mt nt mt', and symmetrically.
struct HierarchyState {
  Field mt, nt;
};

HierarchyState mkdv_hierarchy_rhs(const HierarchyState& hs);

// Periodized peakon c*sqrt(3/2) e^{-|x + c^2 t|}, images summed over |l| <= 10.
// Peak sits at (-c^2 t) mod 2pi; c = 0 is rejected.
Field peakon_profile(double c, double t, const PeriodicGrid& grid);

}  // namespace peakon
