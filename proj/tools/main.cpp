#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "fracspec/atten.hpp"
#include "fracspec/estimators.hpp"
#include "fracspec/fracpde.hpp"
#include "fracspec/io.hpp"
#include "fracspec/pipeline.hpp"
#include "fracspec/stochastic.hpp"
#include "fracspec/types.hpp"

using nlohmann::json;
using namespace fracspec;

namespace {

constexpr const char* kVersion = "0.1.0";

void write_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

std::vector<double> parse_times(const std::string& spec) {
    std::vector<double> times;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) times.push_back(std::stod(tok));
    }
    if (times.empty()) throw std::invalid_argument("no times given");
    return times;
}

int cmd_simulate(const std::string& kind, double beta, double index, double scale,
                 double hurst, std::size_t n, double dt, std::uint64_t seed,
                 const std::string& out_path) {
    TimeSeries ts;
    if (kind == "onef") {
        ts = gen_onef_noise(beta, n, dt, seed);
    } else if (kind == "stable") {
        StableLaw law{index, scale};
        ts.dt = dt;
        ts.values = sample_stable(law, n, seed);
    } else if (kind == "fbm") {
        ts = gen_fbm(hurst, n, dt, seed);
    } else if (kind == "fgn") {
        ts = gen_fgn(hurst, n, dt, seed);
    } else {
        throw std::invalid_argument("unknown --kind '" + kind + "'");
    }
    write_timeseries_csv(out_path, ts);
    json meta = {
        {"command", "simulate"},
        {"kind", kind},
        {"n", n},
        {"dt", dt},
        {"seed", seed},
        {"version", kVersion},
        {"output", out_path},
    };
    if (kind == "onef") meta["beta"] = beta;
    if (kind == "stable") { meta["index"] = index; meta["scale"] = scale; }
    if (kind == "fbm" || kind == "fgn") meta["hurst"] = hurst;
    write_json(out_path + ".json", meta);
    return 0;
}

int cmd_solve(const std::string& eq, double mu, double s, double gamma, double y,
              double alpha0, double c0, double length, std::size_t n_grid,
              const std::string& init, double width, std::uint64_t seed,
              const std::string& times_spec, const std::string& out_path) {
    const auto times = parse_times(times_spec);
    const double dx = length / static_cast<double>(n_grid);
    std::vector<double> p0(n_grid), v0(n_grid, 0.0);
    if (init == "gauss") {
        for (std::size_t i = 0; i < n_grid; ++i) {
            const double x = dx * static_cast<double>(i) - length / 2.0;
            p0[i] = std::exp(-x * x / (2.0 * width * width));
        }
    } else if (init == "broadband") {
        const auto model = build_model(eq == "lossy" ? y : 1.0, alpha0, c0, length, n_grid, seed);
        p0 = model.p0;
    } else {
        throw std::invalid_argument("unknown --init '" + init + "'");
    }

    std::vector<FieldSnapshot> snaps;
    json report = {
        {"command", "solve"}, {"eq", eq}, {"length", length}, {"n_grid", n_grid},
        {"init", init}, {"seed", seed}, {"version", kVersion}, {"output", out_path},
    };
    if (eq == "frac") {
        DiffusionWaveProblem prob;
        prob.mu = mu; prob.s = s; prob.gamma = gamma;
        prob.length = length; prob.p0 = p0;
        if (mu > 1.0) prob.v0 = v0;
        snaps = solve_frac_diffusion_wave(prob, times);
        report["mu"] = mu;
        report["s"] = s;
        report["gamma"] = gamma;
        report["derived_y"] = prob.derived_y();
        report["y_out_of_range_warning"] = snaps.front().y_out_of_range;
        // Zero-mode (mass) conservation diagnostic.
        std::vector<double> mass;
        for (const auto& sn : snaps) {
            double acc = 0.0;
            for (double v : sn.values) acc += v;
            mass.push_back(acc * dx);
        }
        report["mass"] = mass;
    } else if (eq == "lossy") {
        LossyWaveProblem prob;
        prob.c0 = c0; prob.alpha0 = alpha0; prob.y = y;
        prob.length = length; prob.p0 = p0; prob.v0 = v0;
        snaps = solve_lossy_wave(prob, times);
        report["y"] = y;
        report["alpha0"] = alpha0;
        report["c0"] = c0;
        std::vector<double> energy;
        for (const auto& sn : snaps) {
            double acc = 0.0;
            for (double v : sn.values) acc += v * v;
            energy.push_back(acc * dx);
        }
        report["field_energy"] = energy;
    } else {
        throw std::invalid_argument("unknown --eq '" + eq + "'");
    }
    write_snapshots_csv(out_path, length, snaps);
    write_json(out_path + ".json", report);
    return 0;
}

int cmd_estimate(const std::string& in_path, const std::string& out_path) {
    const TimeSeries ts = read_timeseries_csv(in_path);
    const ExponentId id = identify_exponent(ts);
    const auto rs = hurst_rs(ts);
    const auto dfa = hurst_dfa(ts, 1);
    json report = {
        {"command", "estimate"},
        {"input", in_path},
        {"version", kVersion},
        {"beta_hat", id.beta_hat},
        {"y", id.y},
        {"y_clamped", id.clamped},
        {"h_rs", rs.h},
        {"h_rs_saturated", rs.saturated},
        {"h_dfa", dfa.h},
        {"h_dfa_fbm_interpretation", dfa.fbm_interpretation},
    };
    write_json(out_path, report);
    return 0;
}

int cmd_audit(const std::string& in_path, const std::string& out_path) {
    const TimeSeries ts = read_timeseries_csv(in_path);
    const AuditReport rep = relation_audit(ts);
    json report = {
        {"command", "audit"},
        {"input", in_path},
        {"version", kVersion},
        {"beta_hat", rep.beta_hat},
        {"h_rs", rep.h_rs},
        {"h_dfa", rep.h_dfa},
        {"d_hat", rep.d_hat},
        {"beta_pred_eq4", rep.beta_pred_eq4},
        {"residual_eq4", rep.residual_eq4},
        {"triple_label", rep.triple_label},
        {"triple_distance", rep.triple_distance},
        {"line_spectrum_warning", rep.line_spectrum},
        {"h_saturated", rep.h_saturated},
    };
    write_json(out_path, report);
    return 0;
}

int cmd_denoise(const std::string& in_path, double beta, double level,
                const std::string& clean_path, const std::string& out_path) {
    const TimeSeries ts = read_timeseries_csv(in_path);
    std::optional<TimeSeries> clean;
    if (!clean_path.empty()) clean = read_timeseries_csv(clean_path);
    const auto res = denoise(ts, beta, level, clean ? &*clean : nullptr);
    write_timeseries_csv(out_path, res.denoised);
    json report = {
        {"command", "denoise"},
        {"input", in_path},
        {"version", kVersion},
        {"beta", beta},
        {"noise_level", res.noise_level},
        {"output", out_path},
    };
    if (res.has_gain) report["snr_gain_db"] = res.snr_gain_db;
    write_json(out_path + ".json", report);
    return 0;
}

int cmd_pipeline(const std::string& in_path, const std::string& clean_path, double alpha0,
                 double c0, std::size_t n_grid, std::uint64_t seed,
                 const std::string& out_path) {
    const TimeSeries ts = read_timeseries_csv(in_path);
    std::optional<TimeSeries> clean;
    if (!clean_path.empty()) clean = read_timeseries_csv(clean_path);
    const auto res = run_inverse_pipeline(ts, clean ? &*clean : nullptr, alpha0, c0, n_grid, seed);
    const std::string den_path = out_path + ".denoised.csv";
    write_timeseries_csv(den_path, res.denoised);
    json report = {
        {"command", "pipeline"},
        {"input", in_path},
        {"version", kVersion},
        {"seed", seed},
        {"beta_hat", res.beta_hat},
        {"y", res.y},
        {"y_clamped", res.y_clamped},
        {"stable_index_hat", res.stable_index_hat},
        {"noise_level", res.noise_level},
        {"model_alpha0", alpha0},
        {"model_c0", c0},
        {"model_n_grid", n_grid},
        {"denoised_output", den_path},
    };
    if (res.has_gain) report["snr_gain_db"] = res.snr_gain_db;
    write_json(out_path, report);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fracspec: power-law dissipation, 1/f spectra, fractional PDEs, "
                 "Levy statistics and Hurst analysis"};
    app.require_subcommand(1);

    // simulate
    std::string kind = "onef", out_path = "out.csv";
    double beta = 1.0, index = 2.0, scale = 1.0, hurst = 0.5, dt = 1.0;
    std::size_t n = 65536;
    std::uint64_t seed = 0;
    auto* sim = app.add_subcommand("simulate", "Generate synthetic signals (CSV + JSON sidecar)");
    sim->add_option("--kind", kind, "onef | stable | fbm | fgn");
    sim->add_option("--beta", beta, "1/f^beta exponent (onef)");
    sim->add_option("--index", index, "stable index (stable)");
    sim->add_option("--scale", scale, "stable scale (stable)");
    sim->add_option("--hurst", hurst, "Hurst exponent (fbm/fgn)");
    sim->add_option("--n", n, "number of samples");
    sim->add_option("--dt", dt, "sample spacing");
    sim->add_option("--seed", seed, "RNG seed")->required();
    sim->add_option("-o,--output", out_path, "output CSV path");

    // solve
    std::string eq = "frac", init = "gauss", times_spec = "0.1";
    double mu = 1.0, s_ord = 2.0, gamma = 1.0, y_ord = 1.0, alpha0 = 0.05, c0 = 1.0,
           length = 1.0, width = 0.05;
    std::size_t n_grid = 1024;
    std::uint64_t solve_seed = 1;
    std::string solve_out = "solution.csv";
    auto* sol = app.add_subcommand("solve", "Solve the fractional diffusion-wave or lossy wave equation");
    sol->add_option("--eq", eq, "frac | lossy");
    sol->add_option("--mu", mu, "time-fraction order (frac)");
    sol->add_option("--s", s_ord, "space-fraction order (frac)");
    sol->add_option("--gamma", gamma, "viscous constant (frac)");
    sol->add_option("--y", y_ord, "dissipation order (lossy)");
    sol->add_option("--alpha0", alpha0, "attenuation prefactor (lossy)");
    sol->add_option("--c0", c0, "sound speed (lossy)");
    sol->add_option("--length", length, "periodic domain length");
    sol->add_option("--n", n_grid, "grid size");
    sol->add_option("--init", init, "gauss | broadband");
    sol->add_option("--width", width, "gaussian initial width");
    sol->add_option("--seed", solve_seed, "RNG seed (broadband init)");
    sol->add_option("--times", times_spec, "comma-separated output times");
    sol->add_option("-o,--output", solve_out, "output snapshot CSV path");

    // estimate / audit
    std::string est_in, est_out = "estimate.json";
    auto* est = app.add_subcommand("estimate", "Spectral slope + Hurst estimates from a CSV signal");
    est->add_option("--input", est_in, "input CSV")->required();
    est->add_option("-o,--output", est_out, "output JSON path");

    std::string audit_in, audit_out = "audit.json";
    auto* aud = app.add_subcommand("audit", "Relation audit (beta, H, D, relation residual, triple)");
    aud->add_option("--input", audit_in, "input CSV")->required();
    aud->add_option("-o,--output", audit_out, "output JSON path");

    // denoise
    std::string den_in, den_clean, den_out = "denoised.csv";
    double den_beta = 1.0, den_level = -1.0;
    auto* den = app.add_subcommand("denoise", "1/f^beta Wiener-style denoising");
    den->add_option("--input", den_in, "input CSV")->required();
    den->add_option("--beta", den_beta, "noise spectral exponent");
    den->add_option("--level", den_level, "noise prefactor C (< 0 = auto)");
    den->add_option("--clean", den_clean, "clean reference CSV (enables SNR gain)");
    den->add_option("-o,--output", den_out, "output CSV path");

    // pipeline
    std::string pipe_in, pipe_clean, pipe_out = "pipeline.json";
    double pipe_alpha0 = 0.05, pipe_c0 = 1.0;
    std::size_t pipe_grid = 256;
    std::uint64_t pipe_seed = 1;
    auto* pipe = app.add_subcommand("pipeline", "Inverse recipe: beta -> y -> denoise -> stable fit -> model");
    pipe->add_option("--input", pipe_in, "input CSV")->required();
    pipe->add_option("--clean", pipe_clean, "clean reference CSV");
    pipe->add_option("--alpha0", pipe_alpha0, "model attenuation prefactor");
    pipe->add_option("--c0", pipe_c0, "model sound speed");
    pipe->add_option("--n-grid", pipe_grid, "model grid size");
    pipe->add_option("--seed", pipe_seed, "RNG seed for model initial data")->required();
    pipe->add_option("-o,--output", pipe_out, "output JSON path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sim->parsed())
            return cmd_simulate(kind, beta, index, scale, hurst, n, dt, seed, out_path);
        if (sol->parsed())
            return cmd_solve(eq, mu, s_ord, gamma, y_ord, alpha0, c0, length, n_grid, init,
                             width, solve_seed, times_spec, solve_out);
        if (est->parsed()) return cmd_estimate(est_in, est_out);
        if (aud->parsed()) return cmd_audit(audit_in, audit_out);
        if (den->parsed()) return cmd_denoise(den_in, den_beta, den_level, den_clean, den_out);
        if (pipe->parsed())
            return cmd_pipeline(pipe_in, pipe_clean, pipe_alpha0, pipe_c0, pipe_grid,
                                pipe_seed, pipe_out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
