#include "peakon/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <vector>

namespace peakon::detail {
namespace {

struct Plans {
  fftw_plan fwd = nullptr;          // r2c
  fftw_plan bwd = nullptr;          // c2r
  bool bwd_preserves_input = false;
};

std::mutex& plan_mutex() {
  static std::mutex m;
  return m;
}

const Plans& plans_for(int n) {
  static std::map<int, Plans> cache;
  std::lock_guard<std::mutex> lock(plan_mutex());
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  double* real_buf = fftw_alloc_real(n);
  fftw_complex* cplx_buf = fftw_alloc_complex(n / 2 + 1);
  Plans p;
  p.fwd = fftw_plan_dft_r2c_1d(n, real_buf, cplx_buf, FFTW_ESTIMATE | FFTW_UNALIGNED);
  p.bwd = fftw_plan_dft_c2r_1d(n, cplx_buf, real_buf,
                               FFTW_ESTIMATE | FFTW_UNALIGNED | FFTW_PRESERVE_INPUT);
  p.bwd_preserves_input = (p.bwd != nullptr);
  if (!p.bwd_preserves_input) {
    p.bwd = fftw_plan_dft_c2r_1d(n, cplx_buf, real_buf, FFTW_ESTIMATE | FFTW_UNALIGNED);
  }
  fftw_free(real_buf);
  fftw_free(cplx_buf);
  return cache.emplace(n, p).first->second;
}

}  // namespace

void forward_fft(int n, const double* in, std::complex<double>* out) {
  const Plans& p = plans_for(n);
  // out-of-place r2c does not touch its input
  fftw_execute_dft_r2c(p.fwd, const_cast<double*>(in),
                       reinterpret_cast<fftw_complex*>(out));
}

void inverse_fft(int n, const std::complex<double>* in, double* out) {
  const Plans& p = plans_for(n);
  if (p.bwd_preserves_input) {
    fftw_execute_dft_c2r(p.bwd, reinterpret_cast<fftw_complex*>(
                                    const_cast<std::complex<double>*>(in)),
                         out);
  } else {
    std::vector<std::complex<double>> scratch(in, in + n / 2 + 1);
    fftw_execute_dft_c2r(p.bwd, reinterpret_cast<fftw_complex*>(scratch.data()), out);
  }
}

}  // namespace peakon::detail
