#include "fracspec/fracpde.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

#include "fracspec/fft.hpp"
#include "fracspec/mittag_leffler.hpp"

namespace fracspec {

namespace {

constexpr double kPi = std::numbers::pi;

// Angular wavenumber magnitude for mode m of an n-point grid on [0, L).
double mode_k(std::size_t m, std::size_t n, double length) {
    return std::fabs(fft_freq(m, n, 1.0) * static_cast<double>(n) * 2.0 * kPi / length);
}

void check_grid(const std::vector<double>& p0) {
    if (p0.size() < 4) throw std::invalid_argument("fracpde: grid needs at least 4 points");
}

}  // namespace

void DiffusionWaveProblem::validate() const {
    if (!(mu > 0.0 && mu <= 2.0)) throw std::domain_error("DiffusionWaveProblem: mu in (0, 2]");
    if (!(s > 0.0 && s <= 2.0)) throw std::domain_error("DiffusionWaveProblem: s in (0, 2]");
    if (!(gamma > 0.0)) throw std::domain_error("DiffusionWaveProblem: gamma > 0 required");
    if (!(length > 0.0)) throw std::domain_error("DiffusionWaveProblem: length > 0 required");
    check_grid(p0);
    if (mu > 1.0) {
        if (v0.size() != p0.size())
            throw std::invalid_argument(
                "DiffusionWaveProblem: mu > 1 requires an initial velocity of matching size");
    } else if (!v0.empty() && v0.size() != p0.size()) {
        throw std::invalid_argument("DiffusionWaveProblem: v0 size mismatch");
    }
}

void LossyWaveProblem::validate() const {
    if (!(c0 > 0.0)) throw std::domain_error("LossyWaveProblem: c0 > 0 required");
    if (!(alpha0 >= 0.0)) throw std::domain_error("LossyWaveProblem: alpha0 >= 0 required");
    if (!(y >= 0.0 && y <= 2.0)) throw std::domain_error("LossyWaveProblem: y in [0, 2]");
    if (!(length > 0.0)) throw std::domain_error("LossyWaveProblem: length > 0 required");
    check_grid(p0);
    if (v0.size() != p0.size())
        throw std::invalid_argument("LossyWaveProblem: both initial fields required");
}

std::vector<FieldSnapshot> solve_frac_diffusion_wave(const DiffusionWaveProblem& problem,
                                                     const std::vector<double>& times) {
    problem.validate();
    const std::size_t n = problem.p0.size();
    const bool has_velocity = problem.mu > 1.0;
    const bool warn = problem.derived_y() < 0.0 || problem.derived_y() > 2.0;

    auto p0_hat = fft_real(problem.p0);
    std::vector<std::complex<double>> v0_hat;
    if (has_velocity) v0_hat = fft_real(problem.v0);

    std::vector<FieldSnapshot> out;
    out.reserve(times.size());
    for (double t : times) {
        if (t < 0.0) throw std::invalid_argument("solve_frac_diffusion_wave: t must be >= 0");
        FieldSnapshot snap;
        snap.t = t;
        snap.y_out_of_range = warn;
        if (t == 0.0) {
            snap.values = problem.p0;
            out.push_back(std::move(snap));
            continue;
        }
        const double tmu = std::pow(t, problem.mu);
        std::vector<std::complex<double>> evolved(n);
        // Propagators depend only on |k|; cache per magnitude.
        std::unordered_map<double, std::pair<double, double>> cache;
        for (std::size_t m = 0; m < n; ++m) {
            const double k = mode_k(m, n, problem.length);
            auto it = cache.find(k);
            if (it == cache.end()) {
                const double z = -problem.gamma * std::pow(k, problem.s) * tmu;
                const double e1 = mittag_leffler(problem.mu, 1.0, z);
                const double e2 = has_velocity ? mittag_leffler(problem.mu, 2.0, z) : 0.0;
                it = cache.emplace(k, std::make_pair(e1, e2)).first;
            }
            evolved[m] = it->second.first * p0_hat[m];
            if (has_velocity) evolved[m] += t * it->second.second * v0_hat[m];
        }
        auto field = ifft(evolved);
        snap.values.resize(n);
        for (std::size_t i = 0; i < n; ++i) snap.values[i] = field[i].real();
        out.push_back(std::move(snap));
    }
    return out;
}

std::vector<FieldSnapshot> solve_lossy_wave(const LossyWaveProblem& problem,
                                            const std::vector<double>& times) {
    problem.validate();
    const std::size_t n = problem.p0.size();
    auto p0_hat = fft_real(problem.p0);
    auto v0_hat = fft_real(problem.v0);

    std::vector<FieldSnapshot> out;
    out.reserve(times.size());
    for (double t : times) {
        if (t < 0.0) throw std::invalid_argument("solve_lossy_wave: t must be >= 0");
        FieldSnapshot snap;
        snap.t = t;
        std::vector<std::complex<double>> evolved(n);
        for (std::size_t m = 0; m < n; ++m) {
            const double k = mode_k(m, n, problem.length);
            const double delta =
                problem.alpha0 * std::pow(problem.c0, problem.y + 1.0) * std::pow(k, problem.y);
            const double w0 = problem.c0 * k;
            const std::complex<double> p = p0_hat[m], v = v0_hat[m];
            std::complex<double> val;
            if (w0 == 0.0) {
                // Zero mode: p'' + 2 delta p' = 0.
                if (delta > 0.0)
                    val = p + v * (1.0 - std::exp(-2.0 * delta * t)) / (2.0 * delta);
                else
                    val = p + v * t;
            } else if (delta < w0) {
                const double wd = std::sqrt(w0 * w0 - delta * delta);
                val = std::exp(-delta * t) *
                      (p * std::cos(wd * t) + (v + delta * p) * std::sin(wd * t) / wd);
            } else if (delta == w0) {
                val = std::exp(-delta * t) * (p + (v + delta * p) * t);
            } else {
                // Overdamped: combine the exponents, exp(-delta t) * cosh(wd t)
                // overflows to 0 * inf for large t.
                const double wd = std::sqrt(delta * delta - w0 * w0);
                const std::complex<double> q = (v + delta * p) / wd;
                val = 0.5 * ((p + q) * std::exp(-(delta - wd) * t) +
                             (p - q) * std::exp(-(delta + wd) * t));
            }
            evolved[m] = val;
        }
        auto field = ifft(evolved);
        snap.values.resize(n);
        for (std::size_t i = 0; i < n; ++i) snap.values[i] = field[i].real();
        out.push_back(std::move(snap));
    }
    return out;
}

std::string to_string(DiffusionRegime regime) {
    switch (regime) {
        case DiffusionRegime::NormalWave: return "normal_wave";
        case DiffusionRegime::NormalDiffusion: return "normal_diffusion";
        case DiffusionRegime::SubDiffusion: return "sub_diffusion";
        case DiffusionRegime::SuperDiffusion: return "super_diffusion";
        case DiffusionRegime::Other: return "other";
    }
    return "other";
}

ExponentMapResult exponent_map(double mu, double s) {
    if (!(mu >= -1.0 && mu <= 2.0)) throw std::domain_error("exponent_map: mu in [-1, 2]");
    if (!(s >= 0.0 && s <= 2.0)) throw std::domain_error("exponent_map: s in [0, 2]");
    ExponentMapResult res;
    res.y = s - mu + 1.0;
    res.out_of_range = res.y < 0.0 || res.y > 2.0;
    if (mu == 2.0 && s == 2.0)
        res.regime = DiffusionRegime::NormalWave;
    else if (mu == 1.0 && s == 2.0)
        res.regime = DiffusionRegime::NormalDiffusion;
    else if (mu > 0.0 && mu < 1.0 && s == 2.0)
        res.regime = DiffusionRegime::SubDiffusion;
    else if ((mu > 1.0 && s == 2.0) || (mu == 1.0 && s > 0.0 && s < 2.0))
        res.regime = DiffusionRegime::SuperDiffusion;
    else
        res.regime = DiffusionRegime::Other;
    return res;
}

std::vector<double> msd_from_autocorr(const TimeSeries& corr, const std::vector<double>& t_grid) {
    if (corr.size() < 2) throw std::invalid_argument("msd_from_autocorr: need >= 2 lags");
    const double dt = corr.dt;
    const double t_max = dt * static_cast<double>(corr.size() - 1);

    std::vector<double> out;
    out.reserve(t_grid.size());
    for (double t : t_grid) {
        if (t < 0.0 || t > t_max + 1e-12 * t_max)
            throw std::invalid_argument("msd_from_autocorr: t outside sampled lag range");
        // Trapezoid of g(tau) = (t - tau) corr(tau) on the lag grid, with a
        // linearly interpolated partial cell at tau = t.
        double acc = 0.0;
        const auto full = static_cast<std::size_t>(std::floor(t / dt + 1e-12));
        auto g = [&](std::size_t j) {
            return (t - static_cast<double>(j) * dt) * corr.values[j];
        };
        for (std::size_t j = 0; j + 1 <= full && j + 1 < corr.size(); ++j)
            acc += 0.5 * (g(j) + g(j + 1)) * dt;
        const double rem = t - static_cast<double>(full) * dt;
        if (rem > 0.0 && full + 1 < corr.size())
            acc += 0.5 * g(full) * rem;  // g vanishes at tau = t

        out.push_back(2.0 * acc);
    }
    return out;
}

}  // namespace fracspec
