#include "fracspec/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "fracspec/estimators.hpp"
#include "fracspec/fft.hpp"
#include "fracspec/rng.hpp"

namespace fracspec {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

ExponentId identify_exponent(const TimeSeries& signal) {
    if (signal.size() < 4096)
        throw std::invalid_argument("identify_exponent: need at least 2^12 samples");
    std::size_t seg = 256;
    while (seg * 8 <= signal.size() && seg < 4096) seg <<= 1;
    auto est = welch_psd(signal, seg, 0.5);
    const double f_nyq = 0.5 / signal.dt;
    const auto slope = fit_spectral_slope(est, f_nyq / 100.0, f_nyq / 10.0);
    ExponentId out;
    out.beta_hat = slope.beta_hat;
    out.y = std::clamp(slope.beta_hat, 0.0, 2.0);
    out.clamped = out.y != slope.beta_hat;
    return out;
}

DenoiseResult denoise(const TimeSeries& signal, double beta, double noise_level,
                      const TimeSeries* clean_ref) {
    const std::size_t n = signal.size();
    if (n < 1024) throw std::invalid_argument("denoise: need at least 2^10 samples");
    if (beta < 0.0) throw std::domain_error("denoise: beta must be >= 0");

    auto spec = fft_real(signal.values);
    const double dt = signal.dt;

    // Two-sided periodogram, smoothed over neighbouring bins to stabilize
    // the signal-PSD estimate.
    std::vector<double> perio(n);
    for (std::size_t m = 0; m < n; ++m)
        perio[m] = std::norm(spec[m]) * dt / static_cast<double>(n);
    std::vector<double> smooth(n);
    const int hw = 4;
    for (std::size_t m = 0; m < n; ++m) {
        double acc = 0.0;
        int cnt = 0;
        for (int d = -hw; d <= hw; ++d) {
            const long i = static_cast<long>(m) + d;
            if (i >= 0 && i < static_cast<long>(n)) {
                acc += perio[static_cast<std::size_t>(i)];
                ++cnt;
            }
        }
        smooth[m] = acc / cnt;
    }

    double c_used = noise_level;
    if (noise_level < 0.0) {
        // Auto: median of P * f^beta over the lowest decade of frequencies.
        std::vector<double> excess;
        const double f1 = 1.0 / (static_cast<double>(n) * dt);
        for (std::size_t m = 1; m < n / 2; ++m) {
            const double f = static_cast<double>(m) * f1;
            if (f <= 10.0 * f1)
                excess.push_back(smooth[m] * std::pow(f, beta));
        }
        if (excess.empty()) throw std::invalid_argument("denoise: signal too short for auto level");
        std::nth_element(excess.begin(), excess.begin() + excess.size() / 2, excess.end());
        c_used = excess[excess.size() / 2];
    }

    DenoiseResult out;
    out.noise_level = c_used;
    out.denoised.dt = dt;
    out.denoised.values.resize(n);

    std::vector<std::complex<double>> filtered(n);
    for (std::size_t m = 0; m < n; ++m) {
        double gain;
        if (c_used == 0.0) {
            gain = 1.0;
        } else {
            const double f = std::fabs(fft_freq(m, n, dt));
            if (f == 0.0) {
                gain = 0.0;  // noise model diverges at DC
            } else {
                const double noise = c_used * std::pow(f, -beta);
                const double sig = std::max(smooth[m] - noise, 0.0);
                gain = sig / (sig + noise);
            }
        }
        filtered[m] = gain * spec[m];
    }
    auto rec = ifft(filtered);
    for (std::size_t i = 0; i < n; ++i) out.denoised.values[i] = rec[i].real();

    if (clean_ref != nullptr) {
        if (clean_ref->size() != n) throw std::invalid_argument("denoise: clean_ref size mismatch");
        double sig_ss = 0.0, err_in = 0.0, err_out = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double c = clean_ref->values[i];
            sig_ss += c * c;
            err_in += (signal.values[i] - c) * (signal.values[i] - c);
            err_out += (out.denoised.values[i] - c) * (out.denoised.values[i] - c);
        }
        if (err_in > 0.0 && err_out > 0.0) {
            out.snr_gain_db = 10.0 * std::log10((sig_ss / err_out) / (sig_ss / err_in));
            out.has_gain = true;
        }
    }
    return out;
}

double fit_stable_index(const std::vector<double>& residuals) {
    const std::size_t n = residuals.size();
    if (n < 1000) throw std::invalid_argument("fit_stable_index: need at least 10^3 samples");
    const double first = residuals.front();
    bool degenerate = true;
    for (double v : residuals)
        if (v != first) { degenerate = false; break; }
    if (degenerate) throw std::invalid_argument("fit_stable_index: degenerate residuals");

    auto ecf_mag = [&](double k) {
        double re = 0.0, im = 0.0;
        for (double x : residuals) {
            re += std::cos(k * x);
            im += std::sin(k * x);
        }
        return std::hypot(re, im) / static_cast<double>(n);
    };

    // Locate the k where |phi| ~ e^-1 to set the regression band.
    double k_ref = 1.0;
    double mag = ecf_mag(k_ref);
    int guard = 0;
    while (mag > 0.3679 && guard++ < 200) { k_ref *= 1.6; mag = ecf_mag(k_ref); }
    guard = 0;
    while (mag < 0.3679 && guard++ < 200) { k_ref /= 1.6; mag = ecf_mag(k_ref); }

    // Small-k band: |phi| between ~0.93 and ~0.3.
    std::vector<double> lk, ll;
    const int n_pts = 40;
    for (int i = 0; i < n_pts; ++i) {
        const double k = k_ref * std::pow(10.0, -1.1 + 1.3 * static_cast<double>(i) / (n_pts - 1));
        const double m = ecf_mag(k);
        if (m < 0.93 && m > 0.30) {
            lk.push_back(std::log(k));
            ll.push_back(std::log(-std::log(m)));
        }
    }
    if (lk.size() < 5) throw std::invalid_argument("fit_stable_index: characteristic function too flat");
    const LineFit fit = fit_line(lk, ll);
    return std::clamp(fit.slope, 0.05, 2.0);
}

LossyWaveProblem build_model(double y, double alpha0, double c0, double length,
                             std::size_t n_grid, std::uint64_t seed) {
    if (!(y >= 0.0 && y <= 2.0)) throw std::domain_error("build_model: y must be in [0, 2]");
    if (!(alpha0 >= 0.0)) throw std::domain_error("build_model: alpha0 must be >= 0");
    if (!(c0 > 0.0)) throw std::domain_error("build_model: c0 must be > 0");
    if (n_grid < 16) throw std::invalid_argument("build_model: n_grid too small");

    LossyWaveProblem problem;
    problem.c0 = c0;
    problem.alpha0 = alpha0;
    problem.y = y;
    problem.length = length;

    // Flat-spectrum initial condition with random phases over the lower
    // two thirds of the band; v0 = 0 splits each mode into +/- travellers.
    Rng rng(seed);
    std::vector<std::complex<double>> spec(n_grid, 0.0);
    for (std::size_t m = 1; m <= n_grid / 3; ++m) {
        const double phase = rng.uniform(0.0, 2.0 * kPi);
        spec[m] = std::polar(1.0, phase);
        spec[n_grid - m] = std::conj(spec[m]);
    }
    auto field = ifft(spec);
    problem.p0.resize(n_grid);
    for (std::size_t i = 0; i < n_grid; ++i) problem.p0[i] = field[i].real();
    problem.v0.assign(n_grid, 0.0);
    return problem;
}

InverseResult run_inverse_pipeline(const TimeSeries& signal, const TimeSeries* clean_ref,
                                   double alpha0, double c0, std::size_t n_grid,
                                   std::uint64_t seed) {
    InverseResult res;
    const ExponentId id = identify_exponent(signal);
    res.beta_hat = id.beta_hat;
    res.y = id.y;
    res.y_clamped = id.clamped;

    auto den = denoise(signal, std::max(id.beta_hat, 0.0), -1.0, clean_ref);
    res.denoised = den.denoised;
    res.noise_level = den.noise_level;
    res.snr_gain_db = den.snr_gain_db;
    res.has_gain = den.has_gain;

    // Stable index from first differences of the removed component:
    // raw 1/f^beta noise is correlated, its innovations are closer to
    // i.i.d. stable.
    std::vector<double> removed(signal.size());
    for (std::size_t i = 0; i < signal.size(); ++i)
        removed[i] = signal.values[i] - den.denoised.values[i];
    std::vector<double> innov(removed.size() - 1);
    for (std::size_t i = 0; i + 1 < removed.size(); ++i)
        innov[i] = removed[i + 1] - removed[i];
    res.stable_index_hat = fit_stable_index(innov);

    res.model_config = build_model(res.y, alpha0, c0, 1.0, n_grid, seed);
    return res;
}

}  // namespace fracspec
