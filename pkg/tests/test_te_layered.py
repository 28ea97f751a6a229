import numpy as np
import pytest

from eddyplate import MU_0, Plate, fresnel, generalized_reflection, wavenumber


def series_reflection(alpha0, omega, plate, min_terms=20, rel_term=1e-14):
    """Independent oracle: sum the interface multiple-reflection series.

    R~ = R12 + sum_n T12 R23 (R21 R23)^(n-1) T21 E^n,  E = exp(-2 k2 D),
    summed until terms are negligible. Kept deliberately naive.
    """
    mu2 = MU_0 * plate.relative_permeability
    k1 = wavenumber(alpha0, omega, 0.0, MU_0)
    k2 = wavenumber(alpha0, omega, plate.conductivity, mu2)
    r12, t12 = fresnel(k1, k2, MU_0, mu2)
    r21, t21 = fresnel(k2, k1, mu2, MU_0)
    r23 = r21
    E = np.exp(-2.0 * k2 * plate.thickness)
    total = r12
    term = t12 * r23 * t21 * E
    n = 1
    while True:
        total = total + term
        if n >= min_terms and abs(term) < rel_term * abs(total):
            return total, n
        if n > 100000:
            raise RuntimeError("series did not converge")
        term = term * (r21 * r23 * E)
        n += 1


def test_wavenumber_sigma_zero_is_alpha0():
    k = wavenumber(166.67, 2 * np.pi * 123e3, 0.0, MU_0)
    assert k.imag == 0.0
    assert k.real == pytest.approx(166.67, rel=1e-15)


def test_wavenumber_copper_100khz():
    # frozen from a 40-digit evaluation of sqrt(alpha0^2 + j w sigma mu0)
    k = wavenumber(1.0 / 0.006, 2 * np.pi * 100e3, 59.8e6, MU_0)
    assert k.real == pytest.approx(4860.2455392483729, rel=1e-13)
    assert k.imag == pytest.approx(4857.3870469632054, rel=1e-13)


def test_wavenumber_principal_branch():
    rng = np.random.default_rng(7)
    for _ in range(200):
        k = wavenumber(
            rng.uniform(1, 1e4),
            2 * np.pi * 10 ** rng.uniform(0, 7),
            10 ** rng.uniform(4, 8),
            MU_0,
        )
        assert k.real > 0.0
        assert k.imag >= 0.0


def test_wavenumber_skin_depth_asymptote():
    sigma, mu, alpha0 = 59.8e6, MU_0, 166.67
    omega = 2 * np.pi * 1e12  # far above any alpha0 influence
    k = wavenumber(alpha0, omega, sigma, mu)
    scale = np.sqrt(omega * sigma * mu / 2.0)
    assert k / scale == pytest.approx(1.0 + 1.0j, rel=1e-6)


def test_fresnel_identities_grid():
    """T = 1 + R to machine precision, antisymmetry, matched media."""
    rng = np.random.default_rng(11)
    count = 0
    while count < 1000:
        a0 = rng.uniform(10, 5e3)
        omega = 2 * np.pi * 10 ** rng.uniform(1, 6)
        sig_i = rng.uniform(0, 60e6)
        sig_j = rng.uniform(0, 60e6)
        mu_i = MU_0 * rng.uniform(1, 100)
        mu_j = MU_0 * rng.uniform(1, 100)
        k_i = wavenumber(a0, omega, sig_i, mu_i)
        k_j = wavenumber(a0, omega, sig_j, mu_j)
        r, t = fresnel(k_i, k_j, mu_i, mu_j)
        assert t == 1.0 + r  # exact algebraic identity
        assert abs(r) <= 1.0 + 1e-12
        # antisymmetry for equal permeabilities
        r_eq, _ = fresnel(k_i, k_j, mu_i, mu_i)
        r_swap, _ = fresnel(k_j, k_i, mu_i, mu_i)
        assert r_swap == pytest.approx(-r_eq, abs=1e-15)
        count += 1

    # matched media
    k = wavenumber(166.67, 2 * np.pi * 1e5, 1e7, MU_0)
    r, t = fresnel(k, k, MU_0, MU_0)
    assert r == 0.0
    assert t == 1.0


def test_fresnel_perfect_conductor_limit():
    k_i = wavenumber(166.67, 2 * np.pi * 1e5, 0.0, MU_0)
    k_j = wavenumber(166.67, 2 * np.pi * 1e5, 1e16, MU_0)
    r, _ = fresnel(k_i, k_j, MU_0, MU_0)
    assert r == pytest.approx(-1.0, abs=1e-4)


def test_fresnel_degenerate_denominator():
    with pytest.raises(ZeroDivisionError):
        fresnel(0.0 + 0.0j, 0.0 + 0.0j, MU_0, MU_0)


def test_generalized_reflection_vacuum_slab():
    plate = Plate(conductivity=0.0, thickness=3e-3)
    assert generalized_reflection(500.0, 2 * np.pi * 1e5, plate) == 0.0


def test_generalized_reflection_half_space_limit():
    omega = 2 * np.pi * 1e5
    a0 = 166.67
    thick = Plate(conductivity=59.8e6, thickness=10.0)  # many skin depths
    k1 = wavenumber(a0, omega, 0.0, MU_0)
    k2 = wavenumber(a0, omega, 59.8e6, MU_0)
    r_half, _ = fresnel(k1, k2, MU_0, MU_0)
    assert generalized_reflection(a0, omega, thick) == pytest.approx(r_half, rel=1e-12)


def test_generalized_reflection_copper_brass_pairing():
    """Equal sigma*D plates give nearly identical layer reflection."""
    a0 = 166.67
    omega = 2 * np.pi * 100e3
    cu = generalized_reflection(a0, omega, Plate(59.8e6, 0.56e-3))
    br = generalized_reflection(a0, omega, Plate(16.744e6, 2.00e-3))
    assert abs(cu - br) / abs(cu) < 0.05  # pairing, not equality
    # and the two values individually match the series oracle
    for plate, closed in ((Plate(59.8e6, 0.56e-3), cu), (Plate(16.744e6, 2.00e-3), br)):
        oracle, _ = series_reflection(a0, omega, plate)
        assert closed == pytest.approx(oracle, rel=1e-9)


def test_closed_form_matches_series_randomized():
    rng = np.random.default_rng(42)
    checked = 0
    while checked < 200:
        plate = Plate(
            conductivity=rng.uniform(1e6, 60e6),
            thickness=10 ** rng.uniform(np.log10(10e-6), np.log10(5e-3)),
        )
        a0 = rng.uniform(50, 5000)
        omega = 2 * np.pi * 10 ** rng.uniform(1, 6)
        k2 = wavenumber(a0, omega, plate.conductivity, MU_0)
        r21, _ = fresnel(k2, wavenumber(a0, omega, 0.0, MU_0), MU_0, MU_0)
        if abs(r21 * r21 * np.exp(-2 * k2 * plate.thickness)) >= 0.99:
            continue
        oracle, _ = series_reflection(a0, omega, plate)
        closed = generalized_reflection(a0, omega, plate)
        assert closed == pytest.approx(oracle, rel=1e-9)
        checked += 1


def test_reflection_magnitude_nondecreasing_in_thickness():
    """More material reflects more, until internal interference sets in.

    The monotone check is restricted to the pre-interference regime
    (small internal phase 2 Im(k2) D); past it the magnitude genuinely
    overshoots and dips at the percent level.
    """
    a0 = 166.67
    for omega, sigma in ((2 * np.pi * 1e3, 1e6), (2 * np.pi * 5e3, 1e6)):
        thicknesses = np.geomspace(1e-6, 10e-3, 60)
        mags = [abs(generalized_reflection(a0, omega, Plate(sigma, d))) for d in thicknesses]
        assert np.all(np.diff(mags) >= -1e-12)
    # denser interference-limited grid: monotone up to the first phase wrap
    omega, sigma = 2 * np.pi * 50e3, 16.744e6
    k2_imag = wavenumber(a0, omega, sigma, MU_0).imag
    d_wrap = 0.25 * np.pi / (2.0 * k2_imag)
    thicknesses = np.geomspace(1e-6, d_wrap, 40)
    mags = [abs(generalized_reflection(a0, omega, Plate(sigma, d))) for d in thicknesses]
    assert np.all(np.diff(mags) >= -1e-12)
