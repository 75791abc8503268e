"""Power-law dissipation, 1/f spectra, fractional PDEs and Levy statistics."""

from ._fracspec import (
    attenuation_coeff,
    band_power,
    denoise,
    dissipative_dimension,
    exponent_map,
    fit_stable_index,
    fractal_dimension,
    gen_fbm,
    gen_fgn,
    gen_onef_noise,
    hurst_dfa,
    hurst_rs,
    identify_exponent,
    mittag_leffler,
    msd_exponent_fbm,
    msd_exponent_stable,
    power_spectrum,
    relation_audit,
    run_inverse_pipeline,
    sample_stable,
    solve_frac_diffusion_wave,
    solve_lossy_wave,
    spectral_slope,
    stable_pdf,
    welch_psd,
)

__all__ = [
    "attenuation_coeff",
    "band_power",
    "denoise",
    "dissipative_dimension",
    "exponent_map",
    "fit_stable_index",
    "fractal_dimension",
    "gen_fbm",
    "gen_fgn",
    "gen_onef_noise",
    "hurst_dfa",
    "hurst_rs",
    "identify_exponent",
    "mittag_leffler",
    "msd_exponent_fbm",
    "msd_exponent_stable",
    "power_spectrum",
    "relation_audit",
    "run_inverse_pipeline",
    "sample_stable",
    "solve_frac_diffusion_wave",
    "solve_lossy_wave",
    "spectral_slope",
    "stable_pdf",
    "welch_psd",
]
