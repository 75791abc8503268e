#pragma once

#include <complex>
#include <vector>

namespace fracspec {

// In-place-free complex DFT wrappers around FFTW (FFTW_ESTIMATE plans,
// unnormalized forward; inverse divides by n).
std::vector<std::complex<double>> fft(const std::vector<std::complex<double>>& in);
std::vector<std::complex<double>> ifft(const std::vector<std::complex<double>>& in);

std::vector<std::complex<double>> fft_real(const std::vector<double>& in);

// Signed FFT frequency for bin i of an n-point transform at spacing dt
// (numpy fftfreq layout).
double fft_freq(std::size_t i, std::size_t n, double dt);

}  // namespace fracspec
