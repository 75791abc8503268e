#pragma once

#include <cstdint>
#include <vector>

#include "fracspec/types.hpp"

namespace fracspec {

// Symmetric Levy stable law: characteristic function exp(-(c|k|)^index)
// written as exp(-c^index |k|^index). index = 2 is Gaussian with variance
// 2c^2, index = 1 is Cauchy with half-width c.
struct StableLaw {
    double index = 2.0;  // stability exponent in (0, 2]
    double scale = 1.0;  // dispersion c > 0

    void validate() const;
};

// n i.i.d. draws via the Chambers-Mallows-Stuck transform (exact law).
std::vector<double> sample_stable(const StableLaw& law, std::size_t n, std::uint64_t seed);

// Density of the symmetric stable law with Fourier symbol
// exp(-gamma |k|^index t) evaluated on a uniform x grid by inverting the
// characteristic function. With gamma*t = c^index this is the StableLaw
// density.
std::vector<double> stable_pdf(double index, const std::vector<double>& x_grid, double t,
                               double gamma);

// Fractional Gaussian noise: n stationary increments of fBm with Hurst
// exponent H, exact covariance via circulant embedding (Davies-Harte).
// Increment variance is dt^(2H).
TimeSeries gen_fgn(double hurst, std::size_t n, double dt, std::uint64_t seed);

// Fractional Brownian motion path of length n: first sample 0, then the
// cumulative sum of n-1 fGn increments.
TimeSeries gen_fbm(double hurst, std::size_t n, double dt, std::uint64_t seed);

// Gaussian noise with a 1/f^beta power spectrum, synthesized spectrally
// (amplitude f^(-beta/2), random phases).
TimeSeries gen_onef_noise(double beta, std::size_t n, double dt, std::uint64_t seed);

// Ensemble of random-walk displacement paths; positions[p][i] is path p at
// time i*dt, positions[p][0] = 0.
struct PathEnsemble {
    std::size_t n_paths = 0;
    std::size_t n_steps = 0;
    double dt = 1.0;
    std::vector<std::vector<double>> positions;
    bool is_stable = false;  // otherwise fBm
    StableLaw law;           // valid when is_stable
    double hurst = 0.5;      // valid when !is_stable
};

// Levy flight: increments are stable draws scaled by dt^(1/index), so
// x(t) is stable with dispersion c * t^(1/index).
PathEnsemble make_stable_ensemble(const StableLaw& law, std::size_t n_paths,
                                  std::size_t n_steps, double dt, std::uint64_t seed);

PathEnsemble make_fbm_ensemble(double hurst, std::size_t n_paths, std::size_t n_steps,
                               double dt, std::uint64_t seed);

struct MsdFit {
    double exponent = 0.0;  // MSD-equivalent scaling exponent
    double ci = 0.0;        // ~95% half-width from the regression
};

// Fits log E|x(t)|^q vs log t and rescales the slope by 2/q, so the
// expected value is 2/index for stable flights and 2H for fBm. q must stay
// below the stable index (fractional moments only).
MsdFit msd_exponent(const PathEnsemble& ensemble, double q);

}  // namespace fracspec
