#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fracspec/fracpde.hpp"
#include "fracspec/types.hpp"

namespace fracspec {

struct ExponentId {
    double beta_hat = 0.0;
    double y = 0.0;       // = beta_hat, clamped into [0, 2]
    bool clamped = false;
};

// Spectral-slope identification: y is taken equal to the fitted beta.
ExponentId identify_exponent(const TimeSeries& signal);

struct DenoiseResult {
    TimeSeries denoised;
    double noise_level = 0.0;   // the C actually used
    double snr_gain_db = 0.0;   // valid when has_gain
    bool has_gain = false;
};

// Wiener-style spectral attenuation against a C * f^-beta noise model.
// noise_level < 0 requests auto-fit of C from the lowest-decade excess.
// The per-bin gain lies in [0, 1]; C = 0 is the identity.
DenoiseResult denoise(const TimeSeries& signal, double beta, double noise_level,
                      const TimeSeries* clean_ref = nullptr);

// Stability index from the empirical characteristic function:
// log|phi(k)| = -(c k)^y over a small-k band.
double fit_stable_index(const std::vector<double>& residuals);

// Lossy-wave model configured from the identified exponent, loaded with
// seeded broadband initial data (flat initial spectrum, random phases).
LossyWaveProblem build_model(double y, double alpha0, double c0, double length,
                             std::size_t n_grid, std::uint64_t seed);

struct InverseResult {
    double beta_hat = 0.0;
    double y = 0.0;
    bool y_clamped = false;
    double stable_index_hat = 0.0;
    TimeSeries denoised;
    double noise_level = 0.0;
    double snr_gain_db = 0.0;
    bool has_gain = false;
    LossyWaveProblem model_config;
};

// End-to-end recipe: fit beta, set y = beta, denoise with the 1/f^beta
// model, fit the stable index on first differences of the removed noise,
// and configure a lossy-wave model from y.
InverseResult run_inverse_pipeline(const TimeSeries& signal,
                                   const TimeSeries* clean_ref = nullptr,
                                   double alpha0 = 0.05, double c0 = 1.0,
                                   std::size_t n_grid = 256, std::uint64_t seed = 1);

}  // namespace fracspec
