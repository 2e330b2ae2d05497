import math

import numpy as np
import pytest

from gcradon import checks
from gcradon.errors import DivergentIntegral, InvalidKernelIndex
from gcradon.profiles import bump, constant, format_profile, gaussian, gaussian_moment, indicator, power, zero
from gcradon.radon_sh import (
    HarmonicProfile,
    HyperplaneCoord,
    SinogramGrid,
    conjugation_check,
    dual_radon_brute_force,
    dual_radon_profile,
    duality_pairing_check,
    kernel_profile,
    radon_brute_force,
    radon_forward_profile,
    radon_invert_profile,
    radon_profile_forward,
    radon_radial,
    support_scan,
)
from gcradon.specfun import zonal_harmonic

TS = np.array([-1.3, 0.0, 0.5, 1.2, 2.5])


def test_gaussian_profile_closed_form():
    got = radon_profile_forward(HarmonicProfile(3, 0, gaussian()), TS)
    np.testing.assert_allclose(got, math.pi * np.exp(-TS**2), rtol=1e-12)
    assert radon_profile_forward(HarmonicProfile(2, 0, gaussian()), 0.0) == pytest.approx(math.sqrt(math.pi))


def test_gaussian_closed_form_both_routes():
    assert checks.gaussian_closed_form_error() < 1e-8


def test_radial_formula():
    assert radon_radial(3, indicator(1.0), 0.6) == pytest.approx(0.64 * math.pi, rel=1e-12)
    np.testing.assert_allclose(radon_radial(2, gaussian(), TS), math.sqrt(math.pi) * np.exp(-TS**2), rtol=1e-12)
    assert np.all(radon_radial(3, zero(), TS) == 0)


def test_brute_force_examples():
    def g(x):
        return np.exp(-np.sum(x * x, axis=-1))

    got = radon_brute_force(2, g, HyperplaneCoord([0.6, 0.8], 0.7))
    assert got == pytest.approx(math.sqrt(math.pi) * math.exp(-0.49), rel=1e-8)

    def ball(x):
        return (np.sum(x * x, axis=-1) <= 1.0).astype(float)

    got = radon_brute_force(3, ball, HyperplaneCoord([0.0, 0.6, 0.8], 0.6), breaks=(1.0,))
    assert got == pytest.approx(0.64 * math.pi, rel=1e-6)


def test_formula_matches_brute_force():
    assert checks.radon_oracle_error(ms=(0, 2, 3), profiles=(gaussian_moment(2),), ts=np.array([0.3, 1.5])) < 1e-6


def test_parity():
    for m in range(4):
        h = HarmonicProfile(3, m, gaussian_moment(2))
        ts = np.array([0.4, 1.1])
        np.testing.assert_allclose(radon_profile_forward(h, -ts), (-1) ** m * radon_profile_forward(h, ts), atol=1e-15)


def test_sinogram_evenness():
    grid = SinogramGrid.from_profile(HarmonicProfile(2, 3, gaussian_moment(2)))
    assert grid.evenness_defect() < 1e-12
    assert not grid.mask.any()


def test_existence():
    with pytest.raises(DivergentIntegral):
        radon_profile_forward(HarmonicProfile(3, 0, power(-2.0)), 1.0)


def test_kernel_profiles():
    assert format_profile(kernel_profile(3, 2, [(0, 1)]).radial) == "power(-3)"
    h = kernel_profile(2, 4, [(0, 1), (2, -3)])
    assert format_profile(h.radial) == "power(-2)+-3*power(-4)"
    ts = np.array([0.5, 1.0, 2.0])
    assert np.max(np.abs(radon_profile_forward(h, ts))) < 1e-12
    assert radon_profile_forward(HarmonicProfile(3, 2, power(-3)), 0.5) == pytest.approx(0.0, abs=1e-13)
    with pytest.raises(InvalidKernelIndex):
        kernel_profile(3, 3, [(0, 1)])


def test_kernel_scaled_error():
    assert checks.radon_kernel_error() < 1e-8


def test_dual_profile():
    r = np.array([0.5, 2.0])
    for n in (2, 3, 5):
        np.testing.assert_allclose(dual_radon_profile(n, 0, constant(1.0), r), 1.0, rtol=1e-12)
    # the degree 2 dual transform annihilates constants
    assert np.max(np.abs(dual_radon_profile(3, 2, constant(1.0), r))) < 1e-12


def test_dual_brute_force():
    x = np.array([0.0, 0.6, 0.8])
    assert dual_radon_brute_force(3, lambda th, t: np.ones(len(t)), x) == pytest.approx(1.0)
    assert dual_radon_brute_force(3, lambda th, t: t * t, x) == pytest.approx(1 / 3, rel=1e-12)


@pytest.mark.parametrize("n, m", [(2, 2), (3, 2), (3, 1)])
def test_dual_profile_matches_brute_force(n, m):
    axis = np.arange(1.0, n + 1.0) / np.linalg.norm(np.arange(1.0, n + 1.0))
    v = gaussian_moment(m % 2)

    def phi(theta, t):
        return v(np.abs(t)) * np.sign(t) ** m * zonal_harmonic(n, m, axis, theta)

    for r in (0.6, 1.4):
        x = r * np.array([0.3, -0.8, 0.52][:n]) / np.linalg.norm([0.3, -0.8, 0.52][:n])
        formula = dual_radon_profile(n, m, v, r) * zonal_harmonic(n, m, axis, x / r)
        assert dual_radon_brute_force(n, phi, x) == pytest.approx(formula, rel=1e-6, abs=1e-12)


def test_inversion_examples():
    v = math.sqrt(math.pi) * gaussian()
    assert radon_invert_profile(2, 0, v, 0.7) == pytest.approx(math.exp(-0.49), rel=1e-4)
    v = radon_forward_profile(HarmonicProfile(3, 2, gaussian_moment(2)))
    assert radon_invert_profile(3, 2, v, 1.0) == pytest.approx(math.exp(-1.0), rel=1e-4)
    assert radon_invert_profile(3, 2, zero(), 1.0) == 0.0


def test_support_scans():
    assert support_scan(HarmonicProfile(3, 0, bump(0.0, 1.0)), 1.0) < 1e-10
    assert support_scan(HarmonicProfile(2, 2, bump(0.0, 1.0)), 1.0) < 1e-10


def test_support_fails_without_decay():
    # the kernel profile is nonzero for r > a while its transform vanishes there
    h = kernel_profile(3, 2, [(0, 1)])
    assert support_scan(h, 1.0) < 1e-12
    assert h.radial(np.array([2.0]))[0] != 0


def test_duality_pairing():
    c = duality_pairing_check(HarmonicProfile(2, 0, bump(0.0, 1.0)))
    assert c.max_abs < 1e-6
    assert duality_pairing_check(HarmonicProfile(3, 0, gaussian())).max_abs < 1e-6
    assert duality_pairing_check(HarmonicProfile(3, 0, zero())).max_abs == 0


def test_conjugation_identities():
    axis = np.array([0.0, 0.6, 0.8])

    def phi(theta, t):
        t = np.asarray(t, dtype=float)
        with np.errstate(divide="ignore", over="ignore"):
            w = np.where(t != 0, np.exp(-1.0 / (t * t) - t * t), 0.0)
        return w * zonal_harmonic(3, 2, axis, theta)

    c = conjugation_check("dual_from_forward", 3, phi, [np.array([0.3, 0.4, 0.5]), np.array([-1.0, 0.2, 0.7])])
    assert c.max_abs < 1e-5
    f = HarmonicProfile(3, 0, bump(1.0, 2.0))
    c = conjugation_check("forward_from_dual", 3, f, [HyperplaneCoord([0.0, 0.6, 0.8], 0.5), HyperplaneCoord([1.0, 0, 0], 1.5)])
    assert c.max_abs < 1e-5


def test_hyperplane_canonical_form():
    c = HyperplaneCoord([0.0, -1.0], -2.0)
    assert c.theta == (0.0, 1.0) and c.t == 2.0
    c = HyperplaneCoord([-1.0, 0.0], 0.0)
    assert c.theta == (1.0, -0.0) or c.theta == (1.0, 0.0)
