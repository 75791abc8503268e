#include "fracspec/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "fracspec/fft.hpp"
#include "fracspec/rng.hpp"

namespace fracspec {

namespace {

constexpr double kPi = std::numbers::pi;

double draw_stable(const StableLaw& law, Rng& rng) {
    const double a = law.index;
    const double u = rng.uniform(-kPi / 2.0, kPi / 2.0);
    const double w = rng.exponential();
    double x;
    if (a == 1.0) {
        x = std::tan(u);
    } else {
        // Chambers-Mallows-Stuck, symmetric case.
        x = std::sin(a * u) / std::pow(std::cos(u), 1.0 / a) *
            std::pow(std::cos((1.0 - a) * u) / w, (1.0 - a) / a);
    }
    return law.scale * x;
}

// Catmull-Rom interpolation on a uniform grid.
double interp_cubic(const std::vector<double>& y, double x0, double dx, double x) {
    const double s = (x - x0) / dx;
    const auto n = static_cast<long>(y.size());
    long i = static_cast<long>(std::floor(s));
    i = std::clamp(i, 1L, n - 3);
    const double t = s - static_cast<double>(i);
    const double ym = y[i - 1], y0 = y[i], y1 = y[i + 1], y2 = y[i + 2];
    const double a = -0.5 * ym + 1.5 * y0 - 1.5 * y1 + 0.5 * y2;
    const double b = ym - 2.5 * y0 + 2.0 * y1 - 0.5 * y2;
    const double c = -0.5 * ym + 0.5 * y1;
    return ((a * t + b) * t + c) * t + y0;
}

}  // namespace

void StableLaw::validate() const {
    if (!(index > 0.0 && index <= 2.0))
        throw std::domain_error("StableLaw: index must be in (0, 2]");
    if (!(scale > 0.0)) throw std::domain_error("StableLaw: scale must be > 0");
}

std::vector<double> sample_stable(const StableLaw& law, std::size_t n, std::uint64_t seed) {
    law.validate();
    if (n < 1) throw std::invalid_argument("sample_stable: n must be >= 1");
    Rng rng(seed);
    std::vector<double> out(n);
    for (auto& v : out) v = draw_stable(law, rng);
    return out;
}

std::vector<double> stable_pdf(double index, const std::vector<double>& x_grid, double t,
                               double gamma) {
    StableLaw check{index, 1.0};
    check.validate();
    if (!(t > 0.0) || !(gamma > 0.0))
        throw std::domain_error("stable_pdf: t and gamma must be > 0");
    if (x_grid.size() < 2) throw std::invalid_argument("stable_pdf: need at least 2 grid points");
    const double dx_req = x_grid[1] - x_grid[0];
    if (!(dx_req > 0.0)) throw std::invalid_argument("stable_pdf: grid must be increasing");
    for (std::size_t i = 1; i < x_grid.size(); ++i) {
        const double step = x_grid[i] - x_grid[i - 1];
        if (std::fabs(step - dx_req) > 1e-9 * std::max(1.0, std::fabs(dx_req)))
            throw std::invalid_argument("stable_pdf: grid must be uniform");
    }

    const double gt = gamma * t;
    const double width = std::pow(gt, 1.0 / index);
    double x_max = 0.0;
    for (double x : x_grid) x_max = std::max(x_max, std::fabs(x));

    // Period of the FFT inversion. Heavy tails alias with weight
    // ~ Gamma(1+y) sin(pi y/2) gt / (pi P^(1+y)); size P so the image at
    // distance P - x_max is below 1e-9.
    double p_tail;
    if (index == 2.0) {
        p_tail = 14.0 * width;
    } else {
        const double tail_c = std::tgamma(1.0 + index) * std::sin(kPi * index / 2.0) * gt / kPi;
        p_tail = std::pow(tail_c / 1e-9, 1.0 / (1.0 + index));
    }
    const double period = std::max(8.0 * width, x_max + std::max(p_tail, 8.0 * width));

    double dx_int = width / 64.0;
    std::size_t n_fft = 1;
    while (n_fft < static_cast<std::size_t>(period / dx_int) + 1 && n_fft < (1u << 23)) n_fft <<= 1;
    dx_int = period / static_cast<double>(n_fft);
    const double dk = 2.0 * kPi / period;

    // pdf(x_i) = (1/2pi) sum_m exp(-gt |k_m|^y) e^{i k_m x_i} dk with
    // x_i = (i - n/2) dx; the (-1)^m factor recenters the output.
    std::vector<std::complex<double>> spec(n_fft);
    for (std::size_t m = 0; m < n_fft; ++m) {
        const double k = fft_freq(m, n_fft, dx_int) * 2.0 * kPi;
        const double mag = std::exp(-gt * std::pow(std::fabs(k), index));
        const double sign = (m % 2 == 0) ? 1.0 : -1.0;
        spec[m] = sign * mag;
    }
    auto field = fft(spec);
    std::vector<double> dense(n_fft);
    const double norm = dk / (2.0 * kPi);
    for (std::size_t i = 0; i < n_fft; ++i) dense[i] = field[i].real() * norm;

    const double x0 = -0.5 * static_cast<double>(n_fft) * dx_int;
    std::vector<double> out(x_grid.size());
    for (std::size_t i = 0; i < x_grid.size(); ++i) {
        const double x = std::fabs(x_grid[i]);  // enforce exact symmetry
        out[i] = interp_cubic(dense, x0, dx_int, x);
    }
    return out;
}

TimeSeries gen_fgn(double hurst, std::size_t n, double dt, std::uint64_t seed) {
    if (!(hurst > 0.0 && hurst < 1.0))
        throw std::domain_error("gen_fgn: hurst must be in (0, 1)");
    if (n < 2) throw std::invalid_argument("gen_fgn: n must be >= 2");
    if (!(dt > 0.0)) throw std::invalid_argument("gen_fgn: dt must be > 0");

    const double h2 = 2.0 * hurst;
    auto cov = [&](std::size_t j) {
        const double jj = static_cast<double>(j);
        return 0.5 * (std::pow(jj + 1.0, h2) - 2.0 * std::pow(jj, h2) +
                      std::pow(std::fabs(jj - 1.0), h2));
    };

    // Davies-Harte circulant embedding of the fGn covariance.
    const std::size_t m = 2 * n;
    std::vector<std::complex<double>> circ(m);
    for (std::size_t j = 0; j <= n; ++j) circ[j] = cov(j);
    for (std::size_t j = 1; j < n; ++j) circ[m - j] = cov(j);
    auto lambda = fft(circ);

    Rng rng(seed);
    std::vector<std::complex<double>> coeff(m);
    const double mm = static_cast<double>(m);
    for (std::size_t j = 0; j < m; ++j) {
        double lam = lambda[j].real();
        if (lam < 0.0) lam = 0.0;  // clip roundoff; theory gives lam >= 0
        if (j == 0 || j == n) {
            coeff[j] = std::sqrt(lam / mm) * rng.gaussian();
        } else if (j < n) {
            const double g1 = rng.gaussian(), g2 = rng.gaussian();
            coeff[j] = std::sqrt(lam / (2.0 * mm)) * std::complex<double>(g1, g2);
        } else {
            coeff[j] = std::conj(coeff[m - j]);
        }
    }
    auto sample = fft(coeff);

    TimeSeries out;
    out.dt = dt;
    out.values.resize(n);
    const double scale = std::pow(dt, hurst);
    for (std::size_t i = 0; i < n; ++i) out.values[i] = scale * sample[i].real();
    return out;
}

TimeSeries gen_fbm(double hurst, std::size_t n, double dt, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("gen_fbm: n must be >= 2");
    TimeSeries incr = gen_fgn(hurst, n - 1, dt, seed);
    TimeSeries out;
    out.dt = dt;
    out.values.resize(n);
    out.values[0] = 0.0;
    for (std::size_t i = 1; i < n; ++i) out.values[i] = out.values[i - 1] + incr.values[i - 1];
    return out;
}

TimeSeries gen_onef_noise(double beta, std::size_t n, double dt, std::uint64_t seed) {
    if (beta < 0.0) throw std::domain_error("gen_onef_noise: beta must be >= 0");
    if (n < 4) throw std::invalid_argument("gen_onef_noise: n must be >= 4");
    if (!(dt > 0.0)) throw std::invalid_argument("gen_onef_noise: dt must be > 0");

    Rng rng(seed);
    std::vector<std::complex<double>> spec(n, 0.0);
    for (std::size_t m = 1; m <= n / 2; ++m) {
        const double f = static_cast<double>(m) / (static_cast<double>(n) * dt);
        const double amp = std::pow(f, -beta / 2.0);
        if (m == n / 2) {
            spec[m] = amp * rng.gaussian();
        } else {
            spec[m] = amp * std::complex<double>(rng.gaussian(), rng.gaussian());
            spec[n - m] = std::conj(spec[m]);
        }
    }
    auto sig = ifft(spec);
    TimeSeries out;
    out.dt = dt;
    out.values.resize(n);
    double ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        out.values[i] = sig[i].real();
        ss += out.values[i] * out.values[i];
    }
    const double rms = std::sqrt(ss / static_cast<double>(n));
    if (rms > 0.0)
        for (auto& v : out.values) v /= rms;
    return out;
}

PathEnsemble make_stable_ensemble(const StableLaw& law, std::size_t n_paths,
                                  std::size_t n_steps, double dt, std::uint64_t seed) {
    law.validate();
    if (n_paths < 1 || n_steps < 1)
        throw std::invalid_argument("make_stable_ensemble: need n_paths, n_steps >= 1");
    PathEnsemble ens;
    ens.n_paths = n_paths;
    ens.n_steps = n_steps;
    ens.dt = dt;
    ens.is_stable = true;
    ens.law = law;
    ens.positions.assign(n_paths, std::vector<double>(n_steps + 1, 0.0));
    const double step_scale = std::pow(dt, 1.0 / law.index);
    for (std::size_t p = 0; p < n_paths; ++p) {
        Rng rng = Rng::for_substream(seed, p);
        double x = 0.0;
        for (std::size_t i = 1; i <= n_steps; ++i) {
            x += step_scale * draw_stable(law, rng);
            ens.positions[p][i] = x;
        }
    }
    return ens;
}

PathEnsemble make_fbm_ensemble(double hurst, std::size_t n_paths, std::size_t n_steps,
                               double dt, std::uint64_t seed) {
    if (n_paths < 1 || n_steps < 1)
        throw std::invalid_argument("make_fbm_ensemble: need n_paths, n_steps >= 1");
    PathEnsemble ens;
    ens.n_paths = n_paths;
    ens.n_steps = n_steps;
    ens.dt = dt;
    ens.is_stable = false;
    ens.hurst = hurst;
    ens.positions.resize(n_paths);
    for (std::size_t p = 0; p < n_paths; ++p) {
        Rng sub = Rng::for_substream(seed, p);
        ens.positions[p] = gen_fbm(hurst, n_steps + 1, dt, sub.raw()).values;
    }
    return ens;
}

MsdFit msd_exponent(const PathEnsemble& ensemble, double q) {
    if (!(q > 0.0)) throw std::domain_error("msd_exponent: q must be > 0");
    if (ensemble.is_stable && ensemble.law.index < 2.0 && q >= ensemble.law.index)
        throw std::domain_error(
            "msd_exponent: moment of order q diverges for stable index < 2; use q < index");
    const std::size_t n = ensemble.n_steps;
    if (n < 32 || ensemble.n_paths < 1)
        throw std::invalid_argument("msd_exponent: need >= 32 steps spanning 1.5 decades");

    // Log-spaced time indices.
    std::vector<std::size_t> idx;
    const int n_pts = 24;
    for (int i = 0; i < n_pts; ++i) {
        const double f = std::pow(static_cast<double>(n), static_cast<double>(i) / (n_pts - 1));
        auto j = static_cast<std::size_t>(std::lround(f));
        j = std::clamp<std::size_t>(j, 1, n);
        if (idx.empty() || j > idx.back()) idx.push_back(j);
    }
    if (idx.size() < 10)
        throw std::invalid_argument("msd_exponent: need >= 10 distinct time points");

    std::vector<double> lt, lm;
    for (std::size_t j : idx) {
        double acc = 0.0;
        for (const auto& path : ensemble.positions)
            acc += std::pow(std::fabs(path[j]), q);
        acc /= static_cast<double>(ensemble.n_paths);
        lt.push_back(std::log(static_cast<double>(j) * ensemble.dt));
        lm.push_back(std::log(acc));
    }
    const LineFit fit = fit_line(lt, lm);
    MsdFit out;
    out.exponent = fit.slope * 2.0 / q;
    out.ci = 2.0 * fit.slope_stderr * 2.0 / q;
    return out;
}

}  // namespace fracspec
