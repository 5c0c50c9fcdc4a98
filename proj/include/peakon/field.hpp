#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "peakon/grid.hpp"

namespace peakon {

// One real-valued periodic function. Holds matched physical samples and the
// Hermitian half-spectrum (coefficient convention c_k = (1/2pi) int e^{-ikx} f,
// discretized by the rectangle rule, i.e. c_k = X_k / n). Immutable after
// construction: all operators return new Fields, so values can be shared
// freely across threads.
class Field {
 public:
  static Field zeros(const PeriodicGrid& grid);
  static Field from_samples(const PeriodicGrid& grid, std::vector<double> samples);
  // bins k = 0..n/2; imaginary parts of the k=0 and Nyquist bins are dropped
  // (they must vanish for a real field).
  static Field from_spectrum(const PeriodicGrid& grid, std::vector<std::complex<double>> bins);
  // cos_amp*cos(kx) + sin_amp*sin(kx), exact in the spectrum.
  static Field harmonic(const PeriodicGrid& grid, int k, double cos_amp, double sin_amp);
  static Field from_function(const PeriodicGrid& grid, const std::function<double(double)>& f);

  const PeriodicGrid& grid() const { return grid_; }
  int size() const { return grid_.size(); }
  std::span<const double> samples() const { return samples_; }
  std::span<const std::complex<double>> spectrum() const { return spectrum_; }

  double sample(int j) const { return samples_[j]; }
  // Coefficient at signed wavenumber k, |k| <= n/2 (conjugate below zero).
  std::complex<double> coefficient(int k) const;

  bool all_finite() const;
  double max_abs() const;

  Field& operator+=(const Field& o);
  Field& operator-=(const Field& o);
  Field& operator*=(double a);

 private:
  Field(PeriodicGrid grid, std::vector<double> samples, std::vector<std::complex<double>> spectrum)
      : grid_(grid), samples_(std::move(samples)), spectrum_(std::move(spectrum)) {}

  PeriodicGrid grid_;
  std::vector<double> samples_;
  std::vector<std::complex<double>> spectrum_;
};

Field operator+(Field a, const Field& b);
Field operator-(Field a, const Field& b);
Field operator*(double a, Field f);
Field operator-(Field f);

void require_same_grid(const Field& a, const Field& b, const char* where);

}  // namespace peakon
