#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fracspec/types.hpp"

namespace fracspec {

// Periodic 1-D problems; the fractional Laplacian acts spectrally as
// multiplication by |k|^s with k = 2*pi*m/L.

// Time-space fractional diffusion-wave: d^mu p / dt^mu = -gamma (-Lap)^{s/2} p.
struct DiffusionWaveProblem {
    double mu = 1.0;     // time-fraction order in (0, 2]
    double s = 2.0;      // space-fraction order in (0, 2]
    double gamma = 1.0;  // viscous constant > 0
    double length = 1.0; // periodic domain length
    std::vector<double> p0;  // initial field, size = grid size
    std::vector<double> v0;  // initial velocity, required when mu > 1

    // Derived dissipation exponent s - mu + 1.
    double derived_y() const { return s - mu + 1.0; }
    void validate() const;
};

// Lossy wave equation: per-mode damped oscillator
//   p_tt + 2 alpha0 c0^(y+1) |k|^y p_t + c0^2 k^2 p = 0.
struct LossyWaveProblem {
    double c0 = 1.0;      // sound speed > 0
    double alpha0 = 0.0;  // attenuation prefactor >= 0
    double y = 1.0;       // dissipation order in [0, 2]
    double length = 1.0;
    std::vector<double> p0;
    std::vector<double> v0;

    void validate() const;
};

struct FieldSnapshot {
    double t = 0.0;
    std::vector<double> values;
    bool y_out_of_range = false;  // derived y outside [0, 2]
};

// Exact per-mode evolution: p_hat(k,t) = E_mu(-gamma |k|^s t^mu) p0_hat(k)
// plus t E_{mu,2}(...) v0_hat(k) when mu > 1.
std::vector<FieldSnapshot> solve_frac_diffusion_wave(const DiffusionWaveProblem& problem,
                                                     const std::vector<double>& times);

std::vector<FieldSnapshot> solve_lossy_wave(const LossyWaveProblem& problem,
                                            const std::vector<double>& times);

enum class DiffusionRegime { NormalWave, NormalDiffusion, SubDiffusion, SuperDiffusion, Other };

struct ExponentMapResult {
    double y = 0.0;
    DiffusionRegime regime = DiffusionRegime::Other;
    bool out_of_range = false;  // y outside [0, 2]
};

std::string to_string(DiffusionRegime regime);

// y = s - mu + 1 with the regime classification; mu in [-1, 2], s in [0, 2].
ExponentMapResult exponent_map(double mu, double s);

// <x^2>(t) = 2 int_0^t (t - tau) corr(tau) dtau, trapezoid on the sampled
// autocorrelation (lags 0, dt, 2dt, ...).
std::vector<double> msd_from_autocorr(const TimeSeries& corr, const std::vector<double>& t_grid);

}  // namespace fracspec
