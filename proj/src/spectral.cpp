#include "peakon/spectral.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

#include "peakon/fft.hpp"

namespace peakon {

namespace {

using cplx = std::complex<double>;

std::vector<cplx> bins_of(const Field& f) {
  return {f.spectrum().begin(), f.spectrum().end()};
}

// --- mollifier symbol -------------------------------------------------------

double bump_unnormalized(double y) {
  const double d = y * y - 1.0;
  return d < 0.0 ? std::exp(1.0 / d) : 0.0;
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double fa, double fm, double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 48);
}

double bump_mass() {
  static const double mass =
      2.0 * integrate([](double y) { return bump_unnormalized(y); }, 0.0, 1.0, 1e-13);
  return mass;
}

struct SymbolKey {
  double eps;
  int n;
  bool operator<(const SymbolKey& o) const {
    return eps != o.eps ? eps < o.eps : n < o.n;
  }
};

// one symbol table per (eps, grid size); concurrent reads after init
const std::vector<double>& symbol_table(double eps, int n) {
  static std::map<SymbolKey, std::vector<double>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find({eps, n});
  if (it != cache.end()) return it->second;
  std::vector<double> table(n / 2 + 1);
  for (int k = 0; k <= n / 2; ++k) table[k] = mollifier_symbol(eps * k);
  return cache.emplace(SymbolKey{eps, n}, std::move(table)).first->second;
}

}  // namespace

double mollifier_symbol(double t) {
  if (t == 0.0) return 1.0;
  const double raw = 2.0 * integrate(
      [t](double y) { return bump_unnormalized(y) * std::cos(t * y); }, 0.0, 1.0, 1e-13);
  return raw / bump_mass();
}

Field derivative(const Field& f) {
  auto bins = bins_of(f);
  const int kmax = f.grid().max_wavenumber();
  for (int k = 0; k < kmax; ++k) bins[k] *= cplx(0.0, k);
  bins[kmax] = 0.0;
  return Field::from_spectrum(f.grid(), std::move(bins));
}

Field derivative(const Field& f, int order) {
  Field out = f;
  for (int i = 0; i < order; ++i) out = derivative(out);
  return out;
}

Field bessel(const Field& f, double s) {
  auto bins = bins_of(f);
  const int kmax = f.grid().max_wavenumber();
  for (int k = 0; k <= kmax; ++k) {
    const double mult = std::pow(1.0 + static_cast<double>(k) * k, 0.5 * s);
    if (!std::isfinite(mult)) {
      throw std::overflow_error("bessel: multiplier (1+k^2)^{s/2} overflowed at k=" +
                                std::to_string(k) + ", s=" + std::to_string(s));
    }
    bins[k] *= mult;
  }
  return Field::from_spectrum(f.grid(), std::move(bins));
}

Field helmholtz_solve_dx(const Field& f) {
  auto bins = bins_of(f);
  const int kmax = f.grid().max_wavenumber();
  for (int k = 0; k < kmax; ++k) bins[k] *= cplx(0.0, k / (1.0 + static_cast<double>(k) * k));
  bins[kmax] = 0.0;
  return Field::from_spectrum(f.grid(), std::move(bins));
}

Field mollify(const Field& f, double eps) {
  if (!(eps > 0.0)) {
    throw std::invalid_argument("mollify: eps must be positive");
  }
  const auto& table = symbol_table(eps, f.grid().size());
  auto bins = bins_of(f);
  for (size_t k = 0; k < bins.size(); ++k) bins[k] *= table[k];
  return Field::from_spectrum(f.grid(), std::move(bins));
}

Field multiply(const Field& f, const Field& g) {
  require_same_grid(f, g, "multiply");
  const int n = f.size();
  const int m = 2 * n;
  const int kmax = n / 2;

  // zero-pad both spectra onto the doubled grid; the old Nyquist bin splits
  // into +-n/2 (the Hermitian mirror supplies the negative half)
  std::vector<cplx> fine_f(m / 2 + 1, 0.0), fine_g(m / 2 + 1, 0.0);
  for (int k = 0; k < kmax; ++k) {
    fine_f[k] = f.spectrum()[k];
    fine_g[k] = g.spectrum()[k];
  }
  fine_f[kmax] = 0.5 * f.spectrum()[kmax].real();
  fine_g[kmax] = 0.5 * g.spectrum()[kmax].real();

  std::vector<double> pf(m), pg(m);
  detail::inverse_fft(m, fine_f.data(), pf.data());
  detail::inverse_fft(m, fine_g.data(), pg.data());
  for (int j = 0; j < m; ++j) pf[j] *= pg[j];

  std::vector<cplx> fine_p(m / 2 + 1);
  detail::forward_fft(m, pf.data(), fine_p.data());
  const double scale = 1.0 / m;

  std::vector<cplx> coarse(n / 2 + 1);
  for (int k = 0; k < kmax; ++k) coarse[k] = scale * fine_p[k];
  coarse[kmax] = 2.0 * scale * fine_p[kmax].real();
  return Field::from_spectrum(f.grid(), std::move(coarse));
}

double sobolev_norm(const Field& f, double s) {
  const int kmax = f.grid().max_wavenumber();
  const auto spec = f.spectrum();
  double sum = std::norm(spec[0]);
  for (int k = 1; k < kmax; ++k) {
    sum += 2.0 * std::pow(1.0 + static_cast<double>(k) * k, s) * std::norm(spec[k]);
  }
  sum += std::pow(1.0 + static_cast<double>(kmax) * kmax, s) * std::norm(spec[kmax]);
  return std::sqrt(PeriodicGrid::two_pi * sum);
}

double inner_physical(const Field& f, const Field& g) {
  require_same_grid(f, g, "inner_physical");
  double sum = 0.0;
  for (int j = 0; j < f.size(); ++j) sum += f.sample(j) * g.sample(j);
  return sum * f.grid().dx();
}

double inner_spectral(const Field& f, const Field& g) {
  require_same_grid(f, g, "inner_spectral");
  const int kmax = f.grid().max_wavenumber();
  const auto a = f.spectrum(), b = g.spectrum();
  double sum = a[0].real() * b[0].real();
  for (int k = 1; k < kmax; ++k) sum += 2.0 * (a[k] * std::conj(b[k])).real();
  sum += a[kmax].real() * b[kmax].real();
  return PeriodicGrid::two_pi * sum;
}

double integral(const Field& f) { return PeriodicGrid::two_pi * f.spectrum()[0].real(); }

Field reflect(const Field& f) {
  const int n = f.size();
  std::vector<double> samples(n);
  samples[0] = f.sample(0);
  for (int j = 1; j < n; ++j) samples[j] = f.sample(n - j);
  return Field::from_samples(f.grid(), std::move(samples));
}

}  // namespace peakon
