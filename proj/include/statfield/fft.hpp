#ifndef STATFIELD_FFT_HPP
#define STATFIELD_FFT_HPP

#include <complex>
#include <vector>

namespace statfield::fft {

// Thin wrappers over FFTW3 with a mutex-guarded plan cache (FFTW_ESTIMATE |
// FFTW_UNALIGNED, so plans are deterministic and work on any caller buffer).
// Unnormalized conventions: forward(x)[j] = sum_k x[k] e^{-2πi jk/n};
// inverse applies 1/n.

void forward(const std::complex<double>* in, std::complex<double>* out, int n);
void inverse(const std::complex<double>* in, std::complex<double>* out, int n);

void forward(std::vector<std::complex<double>>& data);   // in place
void inverse(std::vector<std::complex<double>>& data);   // in place

/// Real transform: out has n/2+1 bins.
void forward_r2c(const double* in, std::complex<double>* out, int n);
void inverse_c2r(const std::complex<double>* in, double* out, int n);  // scales by 1/n

}  // namespace statfield::fft

#endif
