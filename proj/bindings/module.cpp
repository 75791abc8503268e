#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <vector>

#include "fracspec/atten.hpp"
#include "fracspec/estimators.hpp"
#include "fracspec/fracpde.hpp"
#include "fracspec/mittag_leffler.hpp"
#include "fracspec/pipeline.hpp"
#include "fracspec/stochastic.hpp"
#include "fracspec/types.hpp"

namespace py = pybind11;
using namespace fracspec;

namespace {

std::vector<double> to_vec(const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
    if (a.ndim() != 1) throw std::invalid_argument("expected a 1-D array");
    return {a.data(), a.data() + a.shape(0)};
}

py::array_t<double> to_array(const std::vector<double>& v) {
    return py::array_t<double>(static_cast<py::ssize_t>(v.size()), v.data());
}

TimeSeries to_series(const py::array_t<double, py::array::c_style | py::array::forcecast>& a,
                     double dt) {
    TimeSeries ts;
    ts.dt = dt;
    ts.values = to_vec(a);
    return ts;
}

py::array_t<double> snapshots_to_array(const std::vector<FieldSnapshot>& snaps) {
    const py::ssize_t rows = static_cast<py::ssize_t>(snaps.size());
    const py::ssize_t cols = rows ? static_cast<py::ssize_t>(snaps[0].values.size()) : 0;
    py::array_t<double> out({rows, cols});
    auto buf = out.mutable_unchecked<2>();
    for (py::ssize_t i = 0; i < rows; ++i)
        for (py::ssize_t j = 0; j < cols; ++j)
            buf(i, j) = snaps[static_cast<std::size_t>(i)].values[static_cast<std::size_t>(j)];
    return out;
}

}  // namespace

PYBIND11_MODULE(_fracspec, m) {
    m.doc() = "Power-law dissipation, 1/f spectra, fractional PDEs, Levy stable "
              "statistics and Hurst/fractal estimation";

    using Arr = py::array_t<double, py::array::c_style | py::array::forcecast>;

    // Attenuation model.
    m.def("attenuation_coeff",
          [](double i0, double alpha0, double alpha1, double y, double f) {
              return attenuation_coeff({i0, alpha0, alpha1, y}, f);
          },
          py::arg("i0"), py::arg("alpha0"), py::arg("alpha1"), py::arg("y"), py::arg("f"));
    m.def("power_spectrum",
          [](double i0, double alpha0, double alpha1, double y, double f) {
              return power_spectrum({i0, alpha0, alpha1, y}, f);
          },
          py::arg("i0"), py::arg("alpha0"), py::arg("alpha1"), py::arg("y"), py::arg("f"));
    m.def("band_power",
          [](double i0, double alpha0, double alpha1, double y, double f_lo, double f_hi) {
              const auto res = band_power({i0, alpha0, alpha1, y}, f_lo, f_hi);
              py::dict d;
              d["value"] = res.value;
              d["divergent"] = res.divergent;
              d["divergence_evidence"] = res.divergence_evidence;
              return d;
          },
          py::arg("i0"), py::arg("alpha0"), py::arg("alpha1"), py::arg("y"), py::arg("f_lo"),
          py::arg("f_hi"));
    m.def("dissipative_dimension", &dissipative_dimension, py::arg("alpha"), py::arg("alpha0"),
          py::arg("f"));

    // Mittag-Leffler.
    m.def("mittag_leffler", py::overload_cast<double, double>(&mittag_leffler), py::arg("mu"),
          py::arg("z"));
    m.def("mittag_leffler", py::overload_cast<double, double, double>(&mittag_leffler),
          py::arg("mu"), py::arg("nu"), py::arg("z"));

    // Stochastic generators.
    m.def("sample_stable",
          [](double index, double scale, std::size_t n, std::uint64_t seed) {
              return to_array(sample_stable({index, scale}, n, seed));
          },
          py::arg("index"), py::arg("scale"), py::arg("n"), py::arg("seed"));
    m.def("stable_pdf",
          [](double index, const Arr& x, double t, double gamma) {
              return to_array(stable_pdf(index, to_vec(x), t, gamma));
          },
          py::arg("index"), py::arg("x"), py::arg("t"), py::arg("gamma") = 1.0);
    m.def("gen_fgn",
          [](double hurst, std::size_t n, double dt, std::uint64_t seed) {
              return to_array(gen_fgn(hurst, n, dt, seed).values);
          },
          py::arg("hurst"), py::arg("n"), py::arg("dt"), py::arg("seed"));
    m.def("gen_fbm",
          [](double hurst, std::size_t n, double dt, std::uint64_t seed) {
              return to_array(gen_fbm(hurst, n, dt, seed).values);
          },
          py::arg("hurst"), py::arg("n"), py::arg("dt"), py::arg("seed"));
    m.def("gen_onef_noise",
          [](double beta, std::size_t n, double dt, std::uint64_t seed) {
              return to_array(gen_onef_noise(beta, n, dt, seed).values);
          },
          py::arg("beta"), py::arg("n"), py::arg("dt"), py::arg("seed"));
    m.def("msd_exponent_stable",
          [](double index, double scale, std::size_t n_paths, std::size_t n_steps, double dt,
             double q, std::uint64_t seed) {
              const auto fit =
                  msd_exponent(make_stable_ensemble({index, scale}, n_paths, n_steps, dt, seed), q);
              return py::make_tuple(fit.exponent, fit.ci);
          },
          py::arg("index"), py::arg("scale"), py::arg("n_paths"), py::arg("n_steps"),
          py::arg("dt"), py::arg("q"), py::arg("seed"));
    m.def("msd_exponent_fbm",
          [](double hurst, std::size_t n_paths, std::size_t n_steps, double dt, double q,
             std::uint64_t seed) {
              const auto fit =
                  msd_exponent(make_fbm_ensemble(hurst, n_paths, n_steps, dt, seed), q);
              return py::make_tuple(fit.exponent, fit.ci);
          },
          py::arg("hurst"), py::arg("n_paths"), py::arg("n_steps"), py::arg("dt"), py::arg("q"),
          py::arg("seed"));

    // PDE solvers.
    m.def("solve_frac_diffusion_wave",
          [](double mu, double s, double gamma, double length, const Arr& p0,
             const std::vector<double>& times, std::optional<Arr> v0) {
              DiffusionWaveProblem prob;
              prob.mu = mu;
              prob.s = s;
              prob.gamma = gamma;
              prob.length = length;
              prob.p0 = to_vec(p0);
              if (v0) prob.v0 = to_vec(*v0);
              return snapshots_to_array(solve_frac_diffusion_wave(prob, times));
          },
          py::arg("mu"), py::arg("s"), py::arg("gamma"), py::arg("length"), py::arg("p0"),
          py::arg("times"), py::arg("v0") = py::none());
    m.def("solve_lossy_wave",
          [](double c0, double alpha0, double y, double length, const Arr& p0, const Arr& v0,
             const std::vector<double>& times) {
              LossyWaveProblem prob;
              prob.c0 = c0;
              prob.alpha0 = alpha0;
              prob.y = y;
              prob.length = length;
              prob.p0 = to_vec(p0);
              prob.v0 = to_vec(v0);
              return snapshots_to_array(solve_lossy_wave(prob, times));
          },
          py::arg("c0"), py::arg("alpha0"), py::arg("y"), py::arg("length"), py::arg("p0"),
          py::arg("v0"), py::arg("times"));
    m.def("exponent_map",
          [](double mu, double s) {
              const auto res = exponent_map(mu, s);
              py::dict d;
              d["y"] = res.y;
              d["regime"] = to_string(res.regime);
              d["out_of_range"] = res.out_of_range;
              return d;
          },
          py::arg("mu"), py::arg("s"));

    // Estimators.
    m.def("welch_psd",
          [](const Arr& x, double dt, std::size_t segment_len, double overlap) {
              const auto est = welch_psd(to_series(x, dt), segment_len, overlap);
              return py::make_tuple(to_array(est.freqs), to_array(est.psd));
          },
          py::arg("x"), py::arg("dt"), py::arg("segment_len") = 1024, py::arg("overlap") = 0.5);
    m.def("spectral_slope",
          [](const Arr& x, double dt, std::size_t segment_len, double f_min, double f_max) {
              auto est = welch_psd(to_series(x, dt), segment_len, 0.5);
              const auto fit = fit_spectral_slope(est, f_min, f_max);
              return py::make_tuple(fit.beta_hat, fit.stderr_beta);
          },
          py::arg("x"), py::arg("dt"), py::arg("segment_len"), py::arg("f_min"),
          py::arg("f_max"));
    m.def("hurst_rs",
          [](const Arr& x, double dt) {
              const auto est = hurst_rs(to_series(x, dt));
              py::dict d;
              d["h"] = est.h;
              d["ci"] = est.ci;
              d["saturated"] = est.saturated;
              return d;
          },
          py::arg("x"), py::arg("dt") = 1.0);
    m.def("hurst_dfa",
          [](const Arr& x, double dt, int order) {
              const auto est = hurst_dfa(to_series(x, dt), order);
              py::dict d;
              d["h"] = est.h;
              d["ci"] = est.ci;
              d["saturated"] = est.saturated;
              d["fbm_interpretation"] = est.fbm_interpretation;
              return d;
          },
          py::arg("x"), py::arg("dt") = 1.0, py::arg("order") = 1);
    m.def("fractal_dimension", &fractal_dimension, py::arg("hurst"), py::arg("topological_dim") = 1);
    m.def("relation_audit",
          [](const Arr& x, double dt) {
              const auto rep = relation_audit(to_series(x, dt));
              py::dict d;
              d["beta_hat"] = rep.beta_hat;
              d["h_rs"] = rep.h_rs;
              d["h_dfa"] = rep.h_dfa;
              d["d_hat"] = rep.d_hat;
              d["beta_pred_eq4"] = rep.beta_pred_eq4;
              d["residual_eq4"] = rep.residual_eq4;
              d["triple_label"] = rep.triple_label;
              d["triple_distance"] = rep.triple_distance;
              d["line_spectrum"] = rep.line_spectrum;
              d["h_saturated"] = rep.h_saturated;
              return d;
          },
          py::arg("x"), py::arg("dt") = 1.0);

    // Pipeline.
    m.def("identify_exponent",
          [](const Arr& x, double dt) {
              const auto id = identify_exponent(to_series(x, dt));
              py::dict d;
              d["beta_hat"] = id.beta_hat;
              d["y"] = id.y;
              d["clamped"] = id.clamped;
              return d;
          },
          py::arg("x"), py::arg("dt") = 1.0);
    m.def("denoise",
          [](const Arr& x, double dt, double beta, double noise_level, std::optional<Arr> clean) {
              std::optional<TimeSeries> ref;
              if (clean) ref = to_series(*clean, dt);
              const auto res = denoise(to_series(x, dt), beta, noise_level, ref ? &*ref : nullptr);
              py::dict d;
              d["denoised"] = to_array(res.denoised.values);
              d["noise_level"] = res.noise_level;
              d["snr_gain_db"] = res.has_gain ? py::cast(res.snr_gain_db) : py::none();
              return d;
          },
          py::arg("x"), py::arg("dt"), py::arg("beta"), py::arg("noise_level") = -1.0,
          py::arg("clean") = py::none());
    m.def("fit_stable_index",
          [](const Arr& residuals) { return fit_stable_index(to_vec(residuals)); },
          py::arg("residuals"));
    m.def("run_inverse_pipeline",
          [](const Arr& x, double dt, std::optional<Arr> clean, double alpha0, double c0,
             std::size_t n_grid, std::uint64_t seed) {
              std::optional<TimeSeries> ref;
              if (clean) ref = to_series(*clean, dt);
              const auto res = run_inverse_pipeline(to_series(x, dt), ref ? &*ref : nullptr,
                                                    alpha0, c0, n_grid, seed);
              py::dict d;
              d["beta_hat"] = res.beta_hat;
              d["y"] = res.y;
              d["y_clamped"] = res.y_clamped;
              d["stable_index_hat"] = res.stable_index_hat;
              d["denoised"] = to_array(res.denoised.values);
              d["noise_level"] = res.noise_level;
              d["snr_gain_db"] = res.has_gain ? py::cast(res.snr_gain_db) : py::none();
              return d;
          },
          py::arg("x"), py::arg("dt") = 1.0, py::arg("clean") = py::none(),
          py::arg("alpha0") = 0.05, py::arg("c0") = 1.0, py::arg("n_grid") = 256,
          py::arg("seed") = 1);
}
