#include "fracspec/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>

namespace fracspec {

namespace {
// FFTW planning is not thread-safe; execution is.
std::mutex plan_mutex;

std::vector<std::complex<double>> run(const std::vector<std::complex<double>>& in, int sign) {
    if (in.empty()) throw std::invalid_argument("fft: empty input");
    const int n = static_cast<int>(in.size());
    std::vector<std::complex<double>> out(in.size());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(plan_mutex);
        plan = fftw_plan_dft_1d(
            n,
            reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in.data())),
            reinterpret_cast<fftw_complex*>(out.data()),
            sign, FFTW_ESTIMATE | FFTW_PRESERVE_INPUT);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(plan_mutex);
        fftw_destroy_plan(plan);
    }
    return out;
}
}  // namespace

std::vector<std::complex<double>> fft(const std::vector<std::complex<double>>& in) {
    return run(in, FFTW_FORWARD);
}

std::vector<std::complex<double>> ifft(const std::vector<std::complex<double>>& in) {
    auto out = run(in, FFTW_BACKWARD);
    const double scale = 1.0 / static_cast<double>(in.size());
    for (auto& v : out) v *= scale;
    return out;
}

std::vector<std::complex<double>> fft_real(const std::vector<double>& in) {
    std::vector<std::complex<double>> tmp(in.begin(), in.end());
    return fft(tmp);
}

double fft_freq(std::size_t i, std::size_t n, double dt) {
    const double df = 1.0 / (static_cast<double>(n) * dt);
    const std::size_t half = n / 2;
    if (i < half + (n % 2)) return static_cast<double>(i) * df;
    return -static_cast<double>(n - i) * df;
}

}  // namespace fracspec
