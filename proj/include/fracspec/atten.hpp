#pragma once

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

namespace fracspec {

// Frequency power-law attenuation model: alpha(f) = alpha1 + alpha0 * f^y,
// driving the decay I(t) = I0 * exp(-alpha(f) * t).
struct AttenuationModel {
    double i0 = 1.0;      // initial signal energy (signal-unit^2)
    double alpha0 = 1.0;  // nepers per unit time per Hz^y
    double alpha1 = 0.0;  // frequency-independent offset, nepers per unit time
    double y = 1.0;       // attenuation exponent, in [0, 2]

    void validate() const;
};

// alpha1 + alpha0 * f^y
double attenuation_coeff(const AttenuationModel& model, double f);

// i0 / (alpha1 + alpha0 * f^y). Singular at f = 0 when alpha1 = 0, y > 0.
double power_spectrum(const AttenuationModel& model, double f);

struct BandPowerResult {
    double value = 0.0;  // finite integral; NaN when divergent
    bool divergent = false;
    // (f_lo, partial integral over [f_lo, f_hi]) pairs from geometric
    // refinement of the lower limit toward zero.
    std::vector<std::pair<double, double>> divergence_evidence;
};

// Integral of power_spectrum over [f_lo, f_hi]. With f_lo = 0, alpha1 = 0
// and y >= 1 the integral diverges at the origin (the infrared
// catastrophe); this is detected by probing shell contributions as the
// lower limit is refined geometrically toward zero.
BandPowerResult band_power(const AttenuationModel& model, double f_lo, double f_hi);

// y read back from an attenuation sample: ln(alpha/alpha0) / ln(f).
double dissipative_dimension(double alpha, double alpha0, double f);

struct SpectrumCheck {
    std::complex<double> analytic;  // printed closed form
    std::complex<double> numeric;   // discretized Fourier transform (authoritative)
    double rel_err = 0.0;           // |analytic - numeric| / |numeric|
};

// Cross-check of the closed-form transform of I0*exp(-alpha0 f^y t + i b f t)
// against a trapezoid discretization of the same transform evaluated at
// angular frequency omega, on the time grid {0, dt, ..., (n-1)*dt}.
// Requires alpha1 = 0 and enough grid length that the envelope has decayed
// below 1e-12.
SpectrumCheck appendix_spectrum_check(const AttenuationModel& model, double f, double b,
                                      double omega, double dt, std::size_t n);

}  // namespace fracspec
