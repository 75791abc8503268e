import math

import numpy as np
import pytest

import fracspec as fs


def test_mittag_leffler_classics():
    assert fs.mittag_leffler(1.0, -1.0) == pytest.approx(math.exp(-1.0), abs=1e-12)
    assert fs.mittag_leffler(2.0, -1.0) == pytest.approx(math.cos(1.0), abs=1e-12)
    assert fs.mittag_leffler(0.5, 1.0, -1.0) == pytest.approx(0.42758358, abs=1e-8)


def test_attenuation_and_band_power():
    assert fs.power_spectrum(1.0, 2.0, 0.0, 1.0, 4.0) == pytest.approx(0.125)
    res = fs.band_power(1.0, 1.0, 0.0, 1.0, 0.0, 1.0)
    assert res["divergent"]
    finite = fs.band_power(1.0, 1.0, 0.0, 0.5, 0.0, 1.0)
    assert finite["value"] == pytest.approx(2.0, abs=1e-9)


def test_generators_and_estimators():
    x = fs.gen_onef_noise(1.0, 1 << 15, 1.0, 7)
    assert x.shape == (1 << 15,)
    ident = fs.identify_exponent(x, 1.0)
    assert ident["beta_hat"] == pytest.approx(1.0, abs=0.15)

    fgn = fs.gen_fgn(0.7, 1 << 14, 1.0, 3)
    assert fs.hurst_dfa(fgn)["h"] == pytest.approx(0.7, abs=0.1)
    assert fs.hurst_rs(fgn)["h"] == pytest.approx(0.7, abs=0.1)
    assert fs.fractal_dimension(0.7) == pytest.approx(1.3)


def test_stable_sampling_and_pdf():
    draws = fs.sample_stable(2.0, 1.0, 50000, 11)
    assert np.var(draws) == pytest.approx(2.0, rel=0.05)
    x = np.linspace(-10.0, 10.0, 2001)
    pdf = fs.stable_pdf(1.0, x, 1.0, 1.0)
    assert pdf[1000] == pytest.approx(1.0 / math.pi, abs=1e-6)
    assert fs.fit_stable_index(fs.sample_stable(1.5, 1.0, 100000, 13)) == pytest.approx(
        1.5, abs=0.1
    )


def test_pde_round_trips():
    n, length = 256, 10.0
    xg = np.arange(n) * length / n
    p0 = np.exp(-((xg - 5.0) ** 2) / (2 * 0.4**2))
    snaps = fs.solve_frac_diffusion_wave(1.0, 2.0, 0.3, length, p0, [0.0, 0.5])
    assert snaps.shape == (2, n)
    assert np.sum(snaps[1]) == pytest.approx(np.sum(snaps[0]), rel=1e-12)

    out = fs.solve_lossy_wave(1.0, 0.2, 1.5, length, p0, np.zeros(n), [0.5, 1.0])
    assert np.sum(out[1] ** 2) < np.sum(out[0] ** 2)

    regime = fs.exponent_map(1.0, 2.0)
    assert regime["regime"] == "normal_diffusion"
    assert regime["y"] == pytest.approx(2.0)


def test_msd_and_pipeline():
    exponent, _ = fs.msd_exponent_stable(2.0, 1.0, 1000, 64, 1.0, 2.0, 5)
    assert exponent == pytest.approx(1.0, abs=0.1)

    t = np.arange(1 << 13)
    clean = np.sin(2 * math.pi * 0.11 * t)
    noisy = clean + 0.7 * fs.gen_onef_noise(1.0, t.size, 1.0, 21)
    res = fs.denoise(noisy, 1.0, 1.0, clean=clean)
    assert res["snr_gain_db"] is not None and res["snr_gain_db"] > 3.0

    pipe = fs.run_inverse_pipeline(noisy, 1.0, clean=clean, seed=2)
    assert 0.0 <= pipe["y"] <= 2.0
    assert pipe["denoised"].shape == noisy.shape


def test_reproducibility():
    a = fs.gen_fbm(0.6, 4096, 1.0, 42)
    b = fs.gen_fbm(0.6, 4096, 1.0, 42)
    assert np.array_equal(a, b)
