import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gcradon import checks
from gcradon.errors import DegenerateSphere, DivergentIntegral, OriginPoint, PoleCoordinate
from gcradon.profiles import RadialProfile, bump, gaussian, power, zero
from gcradon.projective import (
    MEASURE_IDENTITIES,
    ChartProfile,
    GeodesicSphereCoord,
    ProjectiveMap,
    funk_forward,
    funk_kernel_profile,
    hyperbolic_forward,
    hyperbolic_kernel_profile,
    measure_transfer_check,
    slice_forward,
    slice_invert_profile,
    slice_kernel_profile,
    slice_profile,
    slice_zonal_forward,
    sphere_mean_forward,
    sphere_mean_invert_profile,
    sphere_mean_kernel_profile,
    sphere_mean_profile,
    support_scan_projective,
)
from gcradon.radon_sh import HarmonicProfile
from gcradon.sphere import unit

ONE = lambda p: np.ones(len(p))  # noqa: E731
POINTS = st.lists(st.floats(-3, 3), min_size=3, max_size=3).filter(lambda v: np.linalg.norm(v) > 1e-3)


def _abs(f):
    return lambda p: np.abs(f(p))


# ---------------------------------------------------------------------------
# maps


@given(POINTS)
def test_sphere_mean_map_round_trip(x):
    mp = ProjectiveMap("sphere_mean_AB", 3)
    x = np.array(x)
    np.testing.assert_allclose(mp.inverse(mp.forward(x)), x, rtol=1e-12, atol=1e-12)


@given(st.lists(st.floats(-5, 5), min_size=3, max_size=3))
def test_funk_and_slice_maps_round_trip(x):
    x = np.array(x)
    for kind in ("funk_mu", "slice_nu"):
        mp = ProjectiveMap(kind, 3)
        y = mp.forward(x)
        assert np.linalg.norm(y) == pytest.approx(1.0, abs=1e-14)
        np.testing.assert_allclose(mp.inverse(y), x, rtol=1e-11, atol=1e-11)


@given(st.lists(st.floats(-1, 1), min_size=2, max_size=2).filter(lambda v: np.linalg.norm(v) < 0.999))
def test_gnomonic_round_trip(y):
    mp = ProjectiveMap("hyperbolic_gnomonic", 2)
    y = np.array(y)
    x = mp.inverse(y)
    assert x[-1] ** 2 - np.sum(x[:-1] ** 2) == pytest.approx(1.0, abs=1e-9)
    np.testing.assert_allclose(mp.forward(x), y, atol=1e-12)


@given(r=st.floats(0.01, 20), a=st.floats(0.01, 20))
def test_funk_map_band_equivalence(r, a):
    theta = ProjectiveMap("funk_mu", 2).forward(np.array([r, 0.0]))
    assert (r > a) == (abs(theta[-1]) < (1 + a * a) ** -0.5) or abs(r - a) < 1e-9


@given(phi=st.floats(0.05, 3.1))
def test_stereographic_radius(phi):
    eta = np.array([math.sin(phi), 0.0, math.cos(phi)])
    x = ProjectiveMap("slice_nu", 2).inverse(eta)
    assert np.linalg.norm(x) == pytest.approx(1 / math.tan(phi / 2), rel=1e-12)


def test_map_errors():
    with pytest.raises(OriginPoint):
        ProjectiveMap("sphere_mean_AB", 2).forward([0.0, 0.0])
    with pytest.raises(PoleCoordinate):
        ProjectiveMap("slice_nu", 2).inverse([0.0, 0.0, 1.0])
    with pytest.raises(PoleCoordinate):
        ProjectiveMap("funk_mu", 2).inverse([1.0, 0.0, 0.0])
    with pytest.raises(ValueError):
        ProjectiveMap("hyperbolic_gnomonic", 2).inverse([0.8, 0.8])
    with pytest.raises(DegenerateSphere):
        GeodesicSphereCoord.slice([1.0, 0.0], 0.0)


def test_map_round_trips_registry(rng):
    assert checks.run_check("projective.round_trips").status == "pass"


# ---------------------------------------------------------------------------
# spheres through the origin


def test_sphere_mean_examples():
    x = np.array([0.3, 0.4, 0.5])
    r = np.linalg.norm(x)
    assert sphere_mean_forward(3, ONE, x) == pytest.approx(1.0, rel=1e-13)
    assert sphere_mean_forward(3, lambda p: np.sum(p * p, axis=1), x) == pytest.approx(2 * r * r, rel=1e-12)


@pytest.mark.xfail(strict=True, reason="r^k profiles are not annihilated for n = 3; the kernel is r^(k+2-n)")
def test_sphere_mean_kernel_with_power_k():
    x = np.array([0.3, 0.4, 0.5])
    h = HarmonicProfile(3, 2, power(0.0))
    assert abs(sphere_mean_forward(3, h, x)) < 1e-7 * sphere_mean_forward(3, _abs(h), x)


@pytest.mark.parametrize("n, m", [(2, 2), (3, 2), (3, 3), (3, 4)])
def test_sphere_mean_kernel(n, m):
    h = sphere_mean_kernel_profile(n, m, checks.kernel_coefficients(m))
    for x in (np.full(n, 0.4), np.array([0.9, -0.2, 0.3][:n])):
        assert abs(sphere_mean_forward(n, h, x)) < 1e-7 * sphere_mean_forward(n, _abs(h), x)


def test_sphere_mean_inversion():
    h = HarmonicProfile(2, 0, gaussian())
    w = sphere_mean_profile(h)
    assert sphere_mean_invert_profile(2, 0, w, 0.8) == pytest.approx(math.exp(-0.64), rel=1e-4)
    assert sphere_mean_invert_profile(2, 0, zero(), 0.8) == 0.0


def test_sphere_mean_existence():
    with pytest.raises(DivergentIntegral):
        sphere_mean_forward(2, HarmonicProfile(2, 2, power(-1.0)), np.array([0.5, 0.5]))


# ---------------------------------------------------------------------------
# Funk


def test_funk_examples():
    assert funk_forward(2, ONE, np.array([1.0, 0, 0])) == pytest.approx(1.0, rel=1e-13)
    assert funk_forward(2, lambda p: p[:, 2] ** 2, np.array([1.0, 0, 0])) == pytest.approx(0.5, rel=1e-13)


def test_funk_annihilates_odd_functions(rng):
    c = rng.standard_normal(4)
    for om in unit(rng.standard_normal((5, 4))):
        assert abs(funk_forward(3, lambda p: np.sinh(p @ c), om)) < 1e-12


@pytest.mark.parametrize("n, m, coeffs", [(2, 2, [(0, 1.0)]), (3, 4, [(0, 1.0), (2, 1.0)])])
def test_funk_kernel(n, m, coeffs, rng):
    f = funk_kernel_profile(n, m, coeffs)
    for om in unit(rng.standard_normal((4, n + 1))):
        assert abs(funk_forward(n, f, om)) < 1e-7 * funk_forward(n, _abs(f), om)


def test_funk_kernel_function_is_explicit():
    # n = 2, k = 0: f(theta) = Y_2(theta'/|theta'|) / (1 - theta_3^2)
    f = funk_kernel_profile(2, 2, [(0, 1.0)])
    theta = unit(np.array([[0.3, 0.5, 0.4]]))
    prime = theta[0, :2] / np.linalg.norm(theta[0, :2])
    y = HarmonicProfile(2, 2, gaussian()).harmonic(prime)
    assert f(theta)[0] == pytest.approx(float(y) / (1 - theta[0, 2] ** 2), rel=1e-12)


# ---------------------------------------------------------------------------
# slice


@pytest.mark.parametrize("psi", [0.1, 0.7, 1.3, math.pi / 2])
def test_slice_of_one(psi):
    assert slice_forward(2, ONE, [1.0, 0.0], psi) == pytest.approx(2 * math.pi * math.sin(psi), abs=1e-7)


def test_slice_zonal_closed_form():
    f0 = RadialProfile(lambda r: np.exp(-r * r) * (1 + r * r) ** 2, 0.0, math.inf)
    ts = np.array([0.2, 1.0, 2.0])
    np.testing.assert_allclose(slice_zonal_forward(3, f0, ts), 4 * math.pi * np.exp(-ts**2), rtol=1e-10)
    assert np.all(slice_zonal_forward(3, zero(), ts) == 0)


def test_slice_zonal_matches_direct():
    assert checks.slice_zonal_error(ns=(2,), psis=(math.pi / 4,)) < 1e-6


@pytest.mark.parametrize("n, m", [(2, 2), (3, 3)])
def test_slice_kernel(n, m):
    f = slice_kernel_profile(n, m, checks.kernel_coefficients(m))
    d = unit(np.array([0.3, -0.8, 0.52][:n]))
    for psi in (0.4, 1.1):
        assert abs(slice_forward(n, f, d, psi)) < 1e-7 * slice_forward(n, _abs(f), d, psi)
    # zero data inverts to zero while f itself is nonzero
    eta = unit(np.array([0.3, -0.5, 0.2, 0.4][: n + 1]))
    assert slice_invert_profile(n, m, zero(), eta) == 0.0
    assert f(eta[None])[0] != 0


def test_slice_inversion():
    p = ChartProfile("slice", HarmonicProfile(2, 0, gaussian()))
    data = slice_profile(p)
    eta = unit(np.array([0.3, -0.5, 0.2]))
    assert slice_invert_profile(2, 0, data, eta) == pytest.approx(float(p(eta[None])[0]), rel=1e-4)


# ---------------------------------------------------------------------------
# hyperbolic


def test_hyperbolic_chord():
    assert checks.hyperbolic_chord_error() < 1e-6


def test_hyperbolic_of_zero():
    p = ChartProfile("hyperbolic", HarmonicProfile(2, 0, zero()))
    assert hyperbolic_forward(2, p, GeodesicSphereCoord.hyperbolic([1.0, 0.0], 0.3)) == 0.0


@pytest.mark.xfail(strict=True, reason="the cut-off kernel profile is not annihilated")
def test_hyperbolic_kernel_vanishes():
    assert checks.projective_kernel_error("hyperbolic", ns=(3,), ms=(2,), count=3) < 1e-7


def test_hyperbolic_kernel_transform_is_nonzero():
    f = hyperbolic_kernel_profile(3, 2, [(0, 1.0)])
    xi = GeodesicSphereCoord.hyperbolic(unit([0.3, -0.8, 0.52]), 0.5)
    value = hyperbolic_forward(3, f, xi)
    assert abs(value) > 1e-3 * hyperbolic_forward(3, _abs(f), xi)
    # both paths give the same nonzero value
    assert hyperbolic_forward(3, f, xi, "via_radon") == pytest.approx(value, rel=1e-6)


def test_hyperbolic_chart_must_be_supported_in_ball():
    with pytest.raises(ValueError):
        ChartProfile("hyperbolic", HarmonicProfile(2, 0, gaussian()))


# ---------------------------------------------------------------------------
# shared


@pytest.mark.parametrize("which", checks.TRANSFORMS)
def test_paths_agree(which):
    assert checks.path_agreement_error(which, ns=(2,), count=5) < 1e-5


@pytest.mark.parametrize("which", MEASURE_IDENTITIES)
@pytest.mark.parametrize("n", [2, 3])
def test_measure_identities(which, n):
    assert measure_transfer_check(which, n).max_rel < 1e-6


def test_measure_identity_on_constant():
    c = measure_transfer_check("stslice", 2, ONE)
    assert c.lhs == pytest.approx(4 * math.pi, rel=1e-6)
    assert c.rhs == pytest.approx(4 * math.pi, rel=1e-6)


def test_support_scans():
    assert checks.projective_support_error() < 1e-9
    p = ChartProfile("hyperbolic", HarmonicProfile(2, 2, bump(0.0, 0.3)))
    assert support_scan_projective("hyperbolic", 2, p, math.atanh(0.3)) < 1e-10


def test_existence_predicates():
    assert checks.run_check("projective.existence").status == "pass"
