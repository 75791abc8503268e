// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Oracles (quadrature, series, closed-form kernels, Prony-style
// decay extraction) are implemented locally so every numeric target is
// checked against an independent reference.

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fracspec/atten.hpp"
#include "fracspec/estimators.hpp"
#include "fracspec/fft.hpp"
#include "fracspec/fracpde.hpp"
#include "fracspec/mittag_leffler.hpp"
#include "fracspec/pipeline.hpp"
#include "fracspec/stochastic.hpp"
#include "fracspec/types.hpp"

using namespace fracspec;

namespace {

constexpr double kPi = std::numbers::pi;
int g_failures = 0;

void report(int idx, const char* name, bool ok, const std::string& detail) {
    std::printf("%s  criterion %2d: %s  (%s)\n", ok ? "PASS" : "FAIL", idx, name,
                detail.c_str());
    if (!ok) ++g_failures;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

// ---- local oracles ----------------------------------------------------

double simpson(const std::function<double(double)>& f, double a, double b) {
    const double m = 0.5 * (a + b);
    return (b - a) / 6.0 * (f(a) + 4.0 * f(m) + f(b));
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double left = simpson(f, a, m), right = simpson(f, m, b);
    if (depth <= 0 || std::fabs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson(f, a, m, left, tol / 2.0, depth - 1) +
           adaptive_simpson(f, m, b, right, tol / 2.0, depth - 1);
}

double integrate_oracle(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12) {
    return adaptive_simpson(f, a, b, simpson(f, a, b), tol, 48);
}

long double ml_series_oracle(long double mu, long double nu, long double z) {
    long double sum = 0.0L;
    for (int k = 0; k < 200; ++k) {
        const long double g = tgammal(mu * k + nu);
        sum += powl(z, k) / g;
    }
    return sum;
}

// Decay-rate extraction for a damped oscillator sampled at uniform spacing
// h: x(t+2h) = A x(t+h) + B x(t) with B = -exp(-2 delta h). Least squares
// over all consecutive triples.
double prony_decay(const std::vector<std::complex<double>>& x, double h) {
    double m00 = 0.0, m01 = 0.0, m11 = 0.0, r0 = 0.0, r1 = 0.0;
    for (std::size_t i = 0; i + 2 < x.size(); ++i) {
        const auto a = x[i + 1], b = x[i], y = x[i + 2];
        m00 += std::norm(a);
        m11 += std::norm(b);
        m01 += (std::conj(a) * b).real();
        r0 += (std::conj(a) * y).real();
        r1 += (std::conj(b) * y).real();
    }
    const double det = m00 * m11 - m01 * m01;
    const double B = (m00 * r1 - m01 * r0) / det;
    return -0.5 * std::log(-B) / h;
}

// ---- CLI helpers ------------------------------------------------------

const std::string kCli = FRACSPEC_CLI_PATH;

int run_cli(const std::string& args) {
    const int rc = std::system((kCli + " " + args + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// ---- criteria ---------------------------------------------------------

void criterion_1() {
    double worst = 0.0;
    bool ok = true;
    for (double beta : {0.5, 1.0, 1.5, 2.0}) {
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            const auto ts = gen_onef_noise(beta, 1 << 16, 1.0, seed * 17);
            const auto id = identify_exponent(ts);
            const double err = std::fabs(id.beta_hat - beta);
            worst = std::max(worst, err);
            ok = ok && err <= 0.1;
        }
    }
    report(1, "spectral slope recovery beta +/- 0.1", ok, "worst abs err " + fmt(worst));
}

void criterion_2() {
    bool ok = true;
    std::string detail;
    for (double y : {1.0, 1.5}) {
        const auto res = band_power({1.0, 1.0, 0.0, y}, 0.0, 1.0);
        bool mono = res.divergent && res.divergence_evidence.size() >= 3;
        for (std::size_t i = 0; i + 1 < res.divergence_evidence.size(); ++i)
            mono = mono && res.divergence_evidence[i + 1].second > res.divergence_evidence[i].second;
        ok = ok && mono;
    }
    const AttenuationModel model{1.0, 1.0, 1.0, 1.5};
    const auto finite = band_power(model, 0.0, 1.0);
    const double oracle = integrate_oracle(
        [&](double f) { return 1.0 / (1.0 + std::pow(f, 1.5)); }, 0.0, 1.0);
    const double err = std::fabs(finite.value - oracle);
    ok = ok && !finite.divergent && err <= 1e-8;
    report(2, "infrared catastrophe probe", ok,
           "finite-case err vs quadrature " + fmt(err));
}

void criterion_3() {
    const double e1 = std::fabs(mittag_leffler(1.0, -1.0) - std::exp(-1.0));
    const double e2 = std::fabs(mittag_leffler(2.0, -1.0) - std::cos(1.0));
    const double oracle = static_cast<double>(ml_series_oracle(0.5L, 1.0L, -1.0L));
    const double e3 = std::fabs(mittag_leffler(0.5, -1.0) - oracle);
    const bool ok = e1 <= 1e-10 && e2 <= 1e-10 && e3 <= 1e-8 &&
                    std::fabs(oracle - 0.42758358) < 5e-9;
    report(3, "Mittag-Leffler accuracy", ok,
           "errs " + fmt(e1) + ", " + fmt(e2) + ", " + fmt(e3));
}

void criterion_4() {
    const std::size_t n = 1024;
    // Heat kernel, mu=1, s=2.
    const double length = 10.0, sigma0 = 0.25, nu = 0.4, t = 0.1;
    DiffusionWaveProblem heat;
    heat.mu = 1.0;
    heat.s = 2.0;
    heat.gamma = nu;
    heat.length = length;
    heat.p0.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = length * static_cast<double>(i) / static_cast<double>(n) - 5.0;
        heat.p0[i] = std::exp(-x * x / (2.0 * sigma0 * sigma0));
    }
    const auto hs = solve_frac_diffusion_wave(heat, {t});
    double num = 0.0, den = 0.0;
    const double s2 = sigma0 * sigma0 + 2.0 * nu * t;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = length * static_cast<double>(i) / static_cast<double>(n) - 5.0;
        double want = 0.0;
        for (int m = -4; m <= 4; ++m) {
            const double d = x + m * length;
            want += sigma0 / std::sqrt(s2) * std::exp(-d * d / (2.0 * s2));
        }
        num += (hs[0].values[i] - want) * (hs[0].values[i] - want);
        den += want * want;
    }
    const double err_heat = std::sqrt(num / den);

    // Wave pulse, mu=2, s=2, gamma = c^2.
    DiffusionWaveProblem wave = heat;
    wave.mu = 2.0;
    wave.gamma = 1.0;
    wave.v0.assign(n, 0.0);
    const double tw = 1.7;
    const auto ws = solve_frac_diffusion_wave(wave, {tw});
    num = den = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = length * static_cast<double>(i) / static_cast<double>(n) - 5.0;
        double want = 0.0;
        for (int m = -4; m <= 4; ++m) {
            const double dl = x - tw + m * length, dr = x + tw + m * length;
            want += 0.5 * std::exp(-dl * dl / (2.0 * sigma0 * sigma0));
            want += 0.5 * std::exp(-dr * dr / (2.0 * sigma0 * sigma0));
        }
        num += (ws[0].values[i] - want) * (ws[0].values[i] - want);
        den += want * want;
    }
    const double err_wave = std::sqrt(num / den);

    // Cauchy kernel, mu=1, s=1: semigroup step checked against stable_pdf.
    const double lc = 60.0, t0 = 0.6, t1 = 0.9;
    DiffusionWaveProblem cauchy;
    cauchy.mu = 1.0;
    cauchy.s = 1.0;
    cauchy.gamma = 1.0;
    cauchy.length = lc;
    std::vector<double> grid(n);
    for (std::size_t i = 0; i < n; ++i)
        grid[i] = lc * static_cast<double>(i) / static_cast<double>(n) - lc / 2.0;
    // Periodized kernel: nearest image from stable_pdf plus the exact
    // lattice remainder. The full Cauchy image sum has the closed form
    // sinh(u) / (L (cosh(u) - cos(2 pi x / L))) with u = 2 pi a / L, so
    // the m != 0 images are that minus the m = 0 Cauchy density.
    auto periodize = [&](double tt) {
        const double a = tt;  // gamma = 1
        auto out = stable_pdf(1.0, grid, tt, 1.0);
        const double u = 2.0 * kPi * a / lc;
        for (std::size_t i = 0; i < n; ++i) {
            const double lattice =
                std::sinh(u) / (lc * (std::cosh(u) - std::cos(2.0 * kPi * grid[i] / lc)));
            out[i] += lattice - a / (kPi * (a * a + grid[i] * grid[i]));
        }
        return out;
    };
    cauchy.p0 = periodize(t0);
    const auto cs = solve_frac_diffusion_wave(cauchy, {t1});
    const auto want_c = periodize(t0 + t1);
    num = den = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        num += (cs[0].values[i] - want_c[i]) * (cs[0].values[i] - want_c[i]);
        den += want_c[i] * want_c[i];
    }
    const double err_cauchy = std::sqrt(num / den);

    const bool ok = err_heat <= 1e-6 && err_wave <= 1e-6 && err_cauchy <= 1e-6;
    report(4, "fractional diffusion-wave reductions", ok,
           "L2 rel errs " + fmt(err_heat) + ", " + fmt(err_wave) + ", " + fmt(err_cauchy));
}

void criterion_5() {
    const double c0 = 1.0, alpha0 = 0.02, length = 2.0 * kPi, h = 0.1137;
    // Single-mode envelope rate vs alpha0 c0^(y+1) |k|^y.
    double worst_single = 0.0;
    for (double y : {0.5, 1.5}) {
        for (int m : {3, 7}) {
            const std::size_t n = 64;
            LossyWaveProblem prob;
            prob.c0 = c0;
            prob.alpha0 = alpha0;
            prob.y = y;
            prob.length = length;
            prob.p0.resize(n);
            prob.v0.assign(n, 0.0);
            for (std::size_t i = 0; i < n; ++i)
                prob.p0[i] = std::cos(m * length * static_cast<double>(i) / static_cast<double>(n));
            std::vector<double> times;
            for (int j = 0; j < 12; ++j) times.push_back(0.3 + h * j);
            const auto snaps = solve_lossy_wave(prob, times);
            std::vector<std::complex<double>> samples;
            for (const auto& sn : snaps) samples.emplace_back(sn.values[0], 0.0);
            const double delta = prony_decay(samples, h);
            const double want = alpha0 * std::pow(c0, y + 1.0) * std::pow(static_cast<double>(m), y);
            worst_single = std::max(worst_single, std::fabs(delta - want) / want);
        }
    }

    // Broadband dispersion: per-mode decay rates from snapshots of a
    // random-phase broadband field, slope of log delta vs log k.
    double worst_y = 0.0;
    for (double y : {0.5, 1.0, 1.5, 2.0}) {
        const std::size_t n = 128;
        auto prob = build_model(y, alpha0, c0, length, n, 77);
        std::vector<double> times;
        for (int j = 0; j < 12; ++j) times.push_back(0.2 + h * j);
        const auto snaps = solve_lossy_wave(prob, times);
        std::vector<std::vector<std::complex<double>>> mode_series(n);
        for (const auto& sn : snaps) {
            std::vector<std::complex<double>> in(n);
            for (std::size_t i = 0; i < n; ++i) in[i] = sn.values[i];
            const auto hat = fft(in);
            for (std::size_t i = 0; i < n; ++i) mode_series[i].push_back(hat[i]);
        }
        std::vector<double> lk, ld;
        for (int m = 2; m <= 32; ++m) {
            const double delta = prony_decay(mode_series[static_cast<std::size_t>(m)], h);
            lk.push_back(std::log(static_cast<double>(m)));
            ld.push_back(std::log(delta));
        }
        const auto fit = fit_line(lk, ld);
        worst_y = std::max(worst_y, std::fabs(fit.slope - y));
    }
    const bool ok = worst_single <= 1e-8 && worst_y <= 0.02;
    report(5, "power-law dissipation consistency", ok,
           "envelope rel err " + fmt(worst_single) + ", dispersion y err " + fmt(worst_y));
}

void criterion_6() {
    const auto g = sample_stable({2.0, 1.3}, 100000, 5);
    double var = 0.0, mean = 0.0;
    for (double v : g) mean += v;
    mean /= static_cast<double>(g.size());
    for (double v : g) var += (v - mean) * (v - mean);
    var /= static_cast<double>(g.size());
    const double var_err = std::fabs(var - 2.0 * 1.3 * 1.3) / (2.0 * 1.3 * 1.3);

    auto c = sample_stable({1.0, 0.7}, 100000, 6);
    std::sort(c.begin(), c.end());
    auto q = [&](double p) { return c[static_cast<std::size_t>(p * (c.size() - 1))]; };
    const double iqr_err = std::fabs((q(0.75) - q(0.25)) - 2.0 * 0.7) / (2.0 * 0.7);

    bool sum_ok = true;
    for (double y : {0.8, 1.0, 1.5, 2.0}) {
        const std::size_t n = 100000, m = 4;
        auto one = sample_stable({y, 1.0}, n, 8);
        const auto many = sample_stable({y, 1.0}, n * m, 9);
        std::vector<double> summed(n);
        const double norm = std::pow(4.0, 1.0 / y);
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < m; ++j) s += many[i * m + j];
            summed[i] = s / norm;
        }
        std::sort(one.begin(), one.end());
        std::sort(summed.begin(), summed.end());
        auto qv = [](const std::vector<double>& v, double p) {
            return v[static_cast<std::size_t>(p * (v.size() - 1))];
        };
        const double span = qv(one, 0.9) - qv(one, 0.1);
        for (int d = 1; d <= 9; ++d)
            sum_ok = sum_ok && std::fabs(qv(one, 0.1 * d) - qv(summed, 0.1 * d)) < 0.03 * span;
    }
    const bool ok = var_err <= 0.03 && iqr_err <= 0.02 && sum_ok;
    report(6, "stable sampler fidelity", ok,
           "var rel err " + fmt(var_err) + ", IQR rel err " + fmt(iqr_err));
}

void criterion_7() {
    double worst_stable = 0.0, worst_fbm = 0.0;
    for (double y : {1.0, 1.5, 2.0}) {
        const auto ens = make_stable_ensemble({y, 1.0}, 40000, 64, 1.0,
                                              static_cast<std::uint64_t>(100 * y));
        const double q = std::min(0.5, y / 3.0);
        const auto fit = msd_exponent(ens, q);
        worst_stable = std::max(worst_stable, std::fabs(fit.exponent - 2.0 / y));
    }
    for (double hh : {0.3, 0.7}) {
        const auto ens = make_fbm_ensemble(hh, 800, 128, 1.0,
                                           static_cast<std::uint64_t>(1000 * hh));
        const auto fit = msd_exponent(ens, 2.0);
        worst_fbm = std::max(worst_fbm, std::fabs(fit.exponent - 2.0 * hh));
    }
    const bool ok = worst_stable <= 0.05 && worst_fbm <= 0.1;
    report(7, "anomalous diffusion scaling", ok,
           "stable err " + fmt(worst_stable) + ", fBm err " + fmt(worst_fbm));
}

void criterion_8() {
    double worst = 0.0;
    bool ok = true;
    for (double hh : {0.3, 0.5, 0.7}) {
        double acc_rs = 0.0, acc_dfa = 0.0;
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            const auto ts = gen_fgn(hh, 1 << 14, 1.0, seed * 31);
            acc_rs += hurst_rs(ts).h;
            acc_dfa += hurst_dfa(ts, 1).h;
        }
        worst = std::max(worst, std::fabs(acc_rs / 20.0 - hh));
        worst = std::max(worst, std::fabs(acc_dfa / 20.0 - hh));
    }
    ok = worst <= 0.07;

    double res_fbm = 0.0;
    for (std::uint64_t seed = 1; seed <= 5; ++seed)
        res_fbm += relation_audit(gen_fbm(0.5, 1 << 15, 1.0, seed * 7)).residual_eq4;
    res_fbm /= 5.0;

    double res_white = 0.0;
    {
        const auto ts = gen_fgn(0.5, 1 << 15, 1.0, 404);
        res_white = relation_audit(ts).residual_eq4;
    }
    ok = ok && std::fabs(res_fbm) <= 0.2 && res_white <= -1.5;
    report(8, "Hurst estimation and beta = 2H + 1 audit", ok,
           "worst H err " + fmt(worst) + ", fBm residual " + fmt(res_fbm) +
               ", white residual " + fmt(res_white));
}

void criterion_9() {
    int good = 0;
    const int trials = 10;
    for (std::uint64_t seed = 1; seed <= trials; ++seed) {
        const auto fbm = relation_audit(gen_fbm(0.5, 1 << 14, 1.0, seed * 13));
        const auto iid = relation_audit(gen_fgn(0.5, 1 << 14, 1.0, seed * 29));
        TimeSeries sine;
        sine.dt = 1.0;
        sine.values.resize(1 << 13);
        for (std::size_t i = 0; i < sine.values.size(); ++i)
            sine.values[i] = std::sin(2.0 * kPi * (static_cast<double>(i) / 4096.0 +
                                                   0.1 * static_cast<double>(seed)));
        const auto det = relation_audit(sine);
        if (fbm.triple_label == "gaussian" && iid.triple_label == "white" &&
            det.triple_label == "deterministic")
            ++good;
    }
    report(9, "canonical (D, H, beta) triples", good == trials,
           std::to_string(good) + "/10 seeds labeled correctly");
}

void criterion_10() {
    // build -> solve -> identify round trip. A single solve is one decaying
    // transient, so the probe record superposes repeated broadband
    // excitations at random start times; the resulting stationary PSD is
    // the per-event energy spectrum, which scales as f^-y.
    const double y_true = 1.5, c0 = 1.0, alpha0 = 0.4, length = 256.0, dt = 0.5;
    const std::size_t n_grid = 1024, n_samp = 1 << 14, n_events = 24;
    TimeSeries record;
    record.dt = dt;
    record.values.assign(n_samp, 0.0);
    std::mt19937_64 arrivals(99);
    for (std::size_t e = 0; e < n_events; ++e) {
        auto model = build_model(y_true, alpha0, c0, length, n_grid, 1000 + e);
        const std::size_t start = e == 0 ? 0 : arrivals() % n_samp;
        std::vector<double> times;
        for (std::size_t i = start; i < n_samp; ++i) {
            times.push_back(static_cast<double>(i - start + 1) * dt);
            if (times.size() == 1024 || i + 1 == n_samp) {
                const auto snaps = solve_lossy_wave(model, times);
                const std::size_t base = i + 1 - times.size();
                for (std::size_t j = 0; j < snaps.size(); ++j)
                    record.values[base + j] += snaps[j].values[0];
                times.clear();
            }
        }
    }
    const auto id = identify_exponent(record);
    const double y_err = std::fabs(id.y - y_true);

    // Denoise fixture: two tones + beta = 1 noise.
    TimeSeries clean;
    clean.dt = 1.0;
    clean.values.resize(1 << 14);
    for (std::size_t i = 0; i < clean.values.size(); ++i) {
        const double t = static_cast<double>(i);
        clean.values[i] = std::sin(2.0 * kPi * 0.11 * t) + 0.6 * std::sin(2.0 * kPi * 0.23 * t);
    }
    const auto noise = gen_onef_noise(1.0, clean.size(), 1.0, 87);
    TimeSeries noisy = clean;
    for (std::size_t i = 0; i < clean.size(); ++i) noisy.values[i] += 0.7 * noise.values[i];
    const auto den = denoise(noisy, 1.0, -1.0, &clean);

    double worst_idx = 0.0;
    for (double y : {1.0, 1.5, 2.0}) {
        const auto draws = sample_stable({y, 1.0}, 200000, static_cast<std::uint64_t>(40 * y));
        worst_idx = std::max(worst_idx, std::fabs(fit_stable_index(draws) - y));
    }
    const bool ok = y_err <= 0.15 && den.has_gain && den.snr_gain_db >= 6.0 && worst_idx <= 0.1;
    report(10, "inverse pipeline round trip", ok,
           "y err " + fmt(y_err) + ", snr gain " + fmt(den.snr_gain_db) + " dB, index err " +
               fmt(worst_idx));
}

void criterion_11() {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "fracspec_acceptance";
    fs::remove_all(dir);
    fs::create_directories(dir);
    auto p = [&](const std::string& name) { return (dir / name).string(); };

    bool ok = true;
    const std::string sig = p("sig.csv");
    const std::vector<std::pair<std::string, std::string>> cmds = {
        {"simulate", "simulate --kind onef --beta 1.0 --n 4096 --seed 12 -o OUT"},
        {"simulate-stable", "simulate --kind stable --index 1.5 --n 4096 --seed 12 -o OUT"},
        {"solve", "solve --eq lossy --y 1.5 --alpha0 0.1 --length 6.28 --n 128 --init broadband "
                  "--seed 12 --times 0.5,1.0 -o OUT"},
        {"estimate", "estimate --input " + sig + " -o OUT"},
        {"audit", "audit --input " + sig + " -o OUT"},
        {"denoise", "denoise --input " + sig + " --beta 1 --level -1 -o OUT"},
        {"pipeline", "pipeline --input " + sig + " --seed 12 -o OUT"},
    };
    ok = ok && run_cli("simulate --kind onef --beta 1.0 --n 4096 --seed 5 -o " + sig) == 0;
    for (const auto& [name, tmpl] : cmds) {
        for (int rep = 0; rep < 2; ++rep) {
            std::string cmd = tmpl;
            const std::string out = p(name + (rep == 0 ? ".a" : ".b"));
            cmd.replace(cmd.find("OUT"), 3, out);
            ok = ok && run_cli(cmd) == 0;
        }
        // The pipeline JSON embeds its own output path, so compare the
        // derived data file for that command.
        const std::string suffix = name == "pipeline" ? ".denoised.csv" : "";
        ok = ok && !slurp(p(name + ".a" + suffix)).empty() &&
             slurp(p(name + ".a" + suffix)) == slurp(p(name + ".b" + suffix));
    }
    fs::remove_all(dir);
    report(11, "seeded CLI reproducibility", ok, ok ? "all commands byte-identical"
                                                    : "mismatch or nonzero exit");
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    if (g_failures == 0) {
        std::printf("ALL ACCEPTANCE CRITERIA PASSED\n");
        return 0;
    }
    std::printf("%d CRITERIA FAILED\n", g_failures);
    return 1;
}
