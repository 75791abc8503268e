#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "fracspec/types.hpp"

namespace fracspec {

struct SpectralEstimate {
    std::vector<double> freqs;  // Hz, DC bin excluded
    std::vector<double> psd;    // one-sided density, sums to variance * df
    double beta_hat = 0.0;
    double stderr_beta = 0.0;
    std::pair<double, double> fit_band{0.0, 0.0};
    bool slope_fitted = false;
};

// Welch-averaged periodogram, Hann window. Normalized so that
// sum(psd) * df matches the time-domain variance of a stationary input.
SpectralEstimate welch_psd(const TimeSeries& signal, std::size_t segment_len, double overlap);

struct SlopeFit {
    double beta_hat = 0.0;   // minus the log-log slope
    double stderr_beta = 0.0;
};

// Least squares of log psd vs log f over [f_min, f_max]; also recorded
// into `est`.
SlopeFit fit_spectral_slope(SpectralEstimate& est, double f_min, double f_max);

struct HurstEstimate {
    double h = 0.5;
    double ci = 0.0;         // ~95% half-width from the scale regression
    bool saturated = false;  // estimate pegged near 1 (trend-dominated)
    bool fbm_interpretation = false;  // DFA only: input judged nonstationary,
                                      // reported h is raw exponent minus 1
};

// Rescaled-range estimator over dyadic window sizes.
HurstEstimate hurst_rs(const TimeSeries& signal);

// Detrended fluctuation analysis, polynomial order 1 or 2. For fGn-like
// input the fluctuation exponent estimates H; for an fBm-like
// (nonstationary) input the raw exponent is H + 1 and the returned h is
// shifted accordingly with fbm_interpretation set.
HurstEstimate hurst_dfa(const TimeSeries& signal, int order = 1);

// D = d + 1 - H.
double fractal_dimension(double hurst, int topological_dim);

struct AuditReport {
    double beta_hat = 0.0;
    double h_rs = 0.0;
    double h_dfa = 0.0;
    double d_hat = 0.0;          // d + 1 - h_dfa, d = 1
    double beta_pred_eq4 = 0.0;  // 2 h_dfa + 1
    double residual_eq4 = 0.0;   // beta_hat - beta_pred_eq4 (signed)
    std::string triple_label;    // nearest of gaussian / white / deterministic
    double triple_distance = 0.0;
    bool line_spectrum = false;  // spectrum dominated by discrete lines
    bool h_saturated = false;
};

// Joint spectral-slope / Hurst / fractal-dimension audit of a signal,
// including the residual of the beta = 2H + 1 relation and the nearest
// canonical (D, H, beta) triple.
AuditReport relation_audit(const TimeSeries& signal);

}  // namespace fracspec
