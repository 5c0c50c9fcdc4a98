#pragma once

#include <complex>

namespace peakon::detail {

// Thin wrapper over FFTW real<->halfcomplex transforms with a per-size plan
// cache. Plan creation is serialized behind a mutex; execution on distinct
// buffers is safe from multiple threads. Plans are created FFTW_UNALIGNED so
// ordinary std::vector storage can be used.

// out[k], k = 0..n/2, receives X_k = sum_j in[j] e^{-i k x_j} (unnormalized).
void forward_fft(int n, const double* in, std::complex<double>* out);

// out[j] = sum over wavenumbers {-n/2+1..n/2} of the Hermitian extension of
// in (unnormalized synthesis). Input is preserved.
void inverse_fft(int n, const std::complex<double>* in, double* out);

}  // namespace peakon::detail
