#pragma once

#include "peakon/field.hpp"

namespace peakon {

// Fourier-multiplier operators and norms. Everything here acts bin-wise on
// the half-spectrum; fields come back with both representations in sync.

// Spectral d/dx: bin k -> i*k * bin k. The Nyquist mode is zeroed so the
// result stays real-valued.
Field derivative(const Field& f);
Field derivative(const Field& f, int order);

// Bessel potential D^s = (1 - d^2/dx^2)^{s/2}: multiplier (1+k^2)^{s/2}.
// D^{-2} is the inverse Helmholtz operator. Throws std::overflow_error if the
// multiplier overflows double range.
Field bessel(const Field& f, double s);

// Fused D^{-2} d/dx: multiplier i*k/(1+k^2), Nyquist zeroed.
Field helmholtz_solve_dx(const Field& f);

// Friedrichs mollifier J_eps: multiplier m_eps(k) = int_{-1}^{1} j(y) cos(eps*k*y) dy
// with j the normalized exp(1/(x^2-1)) bump. m_eps(0) = 1 and |m_eps(k)| <= 1.
// Symbol values are cached per (eps, grid); eps <= 0 is rejected.
Field mollify(const Field& f, double eps);

// Raw mollifier symbol at argument t = eps*k (exposed for tests).
double mollifier_symbol(double t);

// Pointwise product, evaluated with zero-padding to 2n before transforming
// back (alias-free for a single binary product of band-limited factors; cubic
// composites are formed as two such products).
Field multiply(const Field& f, const Field& g);

// H^s norm: sqrt(2pi * sum_k (1+k^2)^s |c_k|^2) over k in {-n/2+1..n/2}.
double sobolev_norm(const Field& f, double s);

// L^2 inner products: rectangle rule on the nodes, and 2pi * spectral pairing.
// The two agree by the discrete Plancherel identity.
double inner_physical(const Field& f, const Field& g);
double inner_spectral(const Field& f, const Field& g);

// 2pi * c_0 (= rectangle rule for the integral over the circle).
double integral(const Field& f);

// f(-x); exact on the grid (node j -> node n-j).
Field reflect(const Field& f);

}  // namespace peakon
