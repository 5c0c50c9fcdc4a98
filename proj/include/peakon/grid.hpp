#pragma once

#include <stdexcept>
#include <string>

namespace peakon {

// Uniform sampling of the circle [0, 2*pi). Node k sits at x_k = 2*pi*k/n.
// The spectral side carries wavenumbers {-n/2+1, ..., n/2}; real fields are
// stored as the n/2+1 nonnegative-k coefficients (Hermitian half-spectrum).
class PeriodicGrid {
 public:
  explicit PeriodicGrid(int n_points) : n_(n_points) {
    if (n_ < 8 || n_ % 2 != 0) {
      throw std::invalid_argument("PeriodicGrid: n_points must be even and >= 8, got " +
                                  std::to_string(n_points));
    }
  }

  int size() const { return n_; }
  int num_bins() const { return n_ / 2 + 1; }   // stored spectral bins, k = 0..n/2
  int max_wavenumber() const { return n_ / 2; }
  double dx() const { return two_pi / n_; }
  double node(int j) const { return two_pi * j / n_; }

  friend bool operator==(const PeriodicGrid& a, const PeriodicGrid& b) { return a.n_ == b.n_; }
  friend bool operator!=(const PeriodicGrid& a, const PeriodicGrid& b) { return a.n_ != b.n_; }

  static constexpr double two_pi = 6.283185307179586476925286766559;

 private:
  int n_;
};

}  // namespace peakon
