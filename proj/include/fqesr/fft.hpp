#pragma once

#include <complex>
#include <vector>

namespace fqesr {

using cplx = std::complex<double>;

// Forward DFT, X[k] = sum_n x[n] e^{-2pi i nk/N}. Power-of-two lengths run
// radix-2 in place; other lengths go through Bluestein's chirp transform.
void fft(std::vector<cplx>& x);

// Inverse DFT including the 1/N normalization.
void ifft(std::vector<cplx>& x);

struct RealSpectrum {
    std::vector<double> frequencies; // k * fs / N, full two-sided grid
    std::vector<cplx> bins;          // length N
    double fs = 0.0;
};

RealSpectrum fft_real(const std::vector<double>& series, double fs);

// Real part of the inverse DFT of a full two-sided spectrum.
std::vector<double> inverse_fft_real(const std::vector<cplx>& bins);

} // namespace fqesr
