#include "statfield/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace statfield::fft {
namespace {

struct PlanSet {
  fftw_plan c2c_fwd = nullptr;
  fftw_plan c2c_bwd = nullptr;
  fftw_plan r2c = nullptr;
  fftw_plan c2r = nullptr;
};

std::mutex g_mutex;
std::map<int, PlanSet>& plan_cache() {
  static std::map<int, PlanSet> cache;
  return cache;
}

// Plans are created once per size against scratch buffers and reused via the
// new-array execute interface (thread-safe in FFTW).
const PlanSet& plans_for(int n) {
  std::lock_guard<std::mutex> lock(g_mutex);
  auto& cache = plan_cache();
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  PlanSet p;
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  std::vector<fftw_complex> a(static_cast<std::size_t>(n));
  std::vector<fftw_complex> b(static_cast<std::size_t>(n));
  std::vector<double> r(static_cast<std::size_t>(n));
  std::vector<fftw_complex> h(static_cast<std::size_t>(n / 2 + 1));
  p.c2c_fwd = fftw_plan_dft_1d(n, a.data(), b.data(), FFTW_FORWARD, flags);
  p.c2c_bwd = fftw_plan_dft_1d(n, a.data(), b.data(), FFTW_BACKWARD, flags);
  p.r2c = fftw_plan_dft_r2c_1d(n, r.data(), h.data(), flags);
  p.c2r = fftw_plan_dft_c2r_1d(n, h.data(), r.data(), flags);
  return cache.emplace(n, p).first->second;
}

fftw_complex* as_fftw(std::complex<double>* p) { return reinterpret_cast<fftw_complex*>(p); }
const fftw_complex* as_fftw(const std::complex<double>* p) {
  return reinterpret_cast<const fftw_complex*>(p);
}

}  // namespace

void forward(const std::complex<double>* in, std::complex<double>* out, int n) {
  const PlanSet& p = plans_for(n);
  fftw_execute_dft(p.c2c_fwd, const_cast<fftw_complex*>(as_fftw(in)), as_fftw(out));
}

void inverse(const std::complex<double>* in, std::complex<double>* out, int n) {
  const PlanSet& p = plans_for(n);
  fftw_execute_dft(p.c2c_bwd, const_cast<fftw_complex*>(as_fftw(in)), as_fftw(out));
  const double inv = 1.0 / n;
  for (int k = 0; k < n; ++k) out[k] *= inv;
}

void forward(std::vector<std::complex<double>>& data) {
  std::vector<std::complex<double>> tmp(data.size());
  forward(data.data(), tmp.data(), static_cast<int>(data.size()));
  data.swap(tmp);
}

void inverse(std::vector<std::complex<double>>& data) {
  std::vector<std::complex<double>> tmp(data.size());
  inverse(data.data(), tmp.data(), static_cast<int>(data.size()));
  data.swap(tmp);
}

void forward_r2c(const double* in, std::complex<double>* out, int n) {
  const PlanSet& p = plans_for(n);
  fftw_execute_dft_r2c(p.r2c, const_cast<double*>(in), as_fftw(out));
}

void inverse_c2r(const std::complex<double>* in, double* out, int n) {
  const PlanSet& p = plans_for(n);
  // c2r destroys its input, so copy first.
  std::vector<std::complex<double>> tmp(in, in + n / 2 + 1);
  fftw_execute_dft_c2r(p.c2r, as_fftw(tmp.data()), out);
  const double inv = 1.0 / n;
  for (int k = 0; k < n; ++k) out[k] *= inv;
}

}  // namespace statfield::fft
