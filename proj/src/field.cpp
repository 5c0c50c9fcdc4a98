#include "peakon/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "peakon/fft.hpp"

namespace peakon {

namespace {

std::vector<std::complex<double>> analyze(const PeriodicGrid& g, const std::vector<double>& samples) {
  std::vector<std::complex<double>> bins(g.num_bins());
  detail::forward_fft(g.size(), samples.data(), bins.data());
  const double scale = 1.0 / g.size();
  for (auto& c : bins) c *= scale;
  return bins;
}

std::vector<double> synthesize(const PeriodicGrid& g, const std::vector<std::complex<double>>& bins) {
  std::vector<double> samples(g.size());
  detail::inverse_fft(g.size(), bins.data(), samples.data());
  return samples;
}

}  // namespace

Field Field::zeros(const PeriodicGrid& grid) {
  return Field(grid, std::vector<double>(grid.size(), 0.0),
               std::vector<std::complex<double>>(grid.num_bins(), 0.0));
}

Field Field::from_samples(const PeriodicGrid& grid, std::vector<double> samples) {
  if (static_cast<int>(samples.size()) != grid.size()) {
    throw std::invalid_argument("Field::from_samples: sample count does not match grid");
  }
  auto bins = analyze(grid, samples);
  return Field(grid, std::move(samples), std::move(bins));
}

Field Field::from_spectrum(const PeriodicGrid& grid, std::vector<std::complex<double>> bins) {
  if (static_cast<int>(bins.size()) != grid.num_bins()) {
    throw std::invalid_argument("Field::from_spectrum: bin count does not match grid");
  }
  bins.front() = bins.front().real();
  bins.back() = bins.back().real();
  auto samples = synthesize(grid, bins);
  return Field(grid, std::move(samples), std::move(bins));
}

Field Field::harmonic(const PeriodicGrid& grid, int k, double cos_amp, double sin_amp) {
  if (k < 0 || k > grid.max_wavenumber()) {
    throw std::invalid_argument("Field::harmonic: wavenumber out of range");
  }
  std::vector<std::complex<double>> bins(grid.num_bins(), 0.0);
  if (k == 0) {
    bins[0] = cos_amp;
  } else if (k == grid.max_wavenumber()) {
    // sin(kx) vanishes at every node for the Nyquist mode
    bins[k] = cos_amp;
  } else {
    bins[k] = std::complex<double>(cos_amp / 2.0, -sin_amp / 2.0);
  }
  return from_spectrum(grid, std::move(bins));
}

Field Field::from_function(const PeriodicGrid& grid, const std::function<double(double)>& f) {
  std::vector<double> samples(grid.size());
  for (int j = 0; j < grid.size(); ++j) samples[j] = f(grid.node(j));
  return from_samples(grid, std::move(samples));
}

std::complex<double> Field::coefficient(int k) const {
  const int kmax = grid_.max_wavenumber();
  if (k > kmax || k <= -kmax) {
    throw std::invalid_argument("Field::coefficient: wavenumber out of range");
  }
  return k >= 0 ? spectrum_[k] : std::conj(spectrum_[-k]);
}

bool Field::all_finite() const {
  return std::all_of(samples_.begin(), samples_.end(),
                     [](double v) { return std::isfinite(v); });
}

double Field::max_abs() const {
  double m = 0.0;
  for (double v : samples_) m = std::max(m, std::abs(v));
  return m;
}

Field& Field::operator+=(const Field& o) {
  require_same_grid(*this, o, "Field::operator+=");
  for (int j = 0; j < size(); ++j) samples_[j] += o.samples_[j];
  for (int k = 0; k < grid_.num_bins(); ++k) spectrum_[k] += o.spectrum_[k];
  return *this;
}

Field& Field::operator-=(const Field& o) {
  require_same_grid(*this, o, "Field::operator-=");
  for (int j = 0; j < size(); ++j) samples_[j] -= o.samples_[j];
  for (int k = 0; k < grid_.num_bins(); ++k) spectrum_[k] -= o.spectrum_[k];
  return *this;
}

Field& Field::operator*=(double a) {
  for (auto& v : samples_) v *= a;
  for (auto& c : spectrum_) c *= a;
  return *this;
}

Field operator+(Field a, const Field& b) { return a += b; }
Field operator-(Field a, const Field& b) { return a -= b; }
Field operator*(double a, Field f) { return f *= a; }
Field operator-(Field f) { return f *= -1.0; }

void require_same_grid(const Field& a, const Field& b, const char* where) {
  if (a.grid() != b.grid()) {
    throw std::invalid_argument(std::string(where) + ": fields live on different grids");
  }
}

}  // namespace peakon
