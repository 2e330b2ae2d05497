import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy import integrate, special

from gcradon.specfun import (
    PolyParams,
    chebyshev,
    funk_hecke_kernel,
    gegenbauer,
    mellin_alpha,
    mellin_beta,
    normalizing_constant,
    sh_dimension,
    sphere_area,
    zonal_harmonic,
)
from gcradon.sphere import sphere_rule


@pytest.mark.parametrize(
    "lam, m, t, expected",
    [(1.0, 2, 1.0, 3.0), (0.5, 1, 0.3, 0.3), (1.5, 3, 0.5, -1.5625)],
)
def test_gegenbauer_values(lam, m, t, expected):
    assert gegenbauer(lam, m, t) == pytest.approx(expected, abs=1e-13)


@pytest.mark.parametrize("m, t, expected", [(0, 0.7, 1.0), (2, 0.5, -0.5), (3, 0.8, 4 * 0.8**3 - 3 * 0.8)])
def test_chebyshev_values(m, t, expected):
    assert chebyshev(m, t) == pytest.approx(expected, abs=1e-13)


@given(
    lam=st.floats(0.05, 3.0),
    m=st.integers(0, 12),
    t=st.floats(-1.0, 1.0),
)
def test_gegenbauer_matches_library(lam, m, t):
    expected = special.eval_gegenbauer(m, lam, t)
    assert gegenbauer(lam, m, t) == pytest.approx(expected, rel=1e-10, abs=1e-10)


@given(m=st.integers(0, 15), t=st.floats(-1.0, 1.0))
def test_chebyshev_matches_cosine(m, t):
    assert chebyshev(m, t) == pytest.approx(math.cos(m * math.acos(t)), abs=1e-11)


@given(lam=st.floats(0.05, 3.0), m=st.integers(0, 7).map(lambda k: 2 * k + 1))
def test_odd_degree_vanishes_at_zero(lam, m):
    assert gegenbauer(lam, m, 0.0) == 0.0
    assert chebyshev(m, 0.0) == 0.0


def test_rejects_invalid_parameters():
    with pytest.raises(ValueError):
        PolyParams(-0.5, 2)
    with pytest.raises(ValueError):
        PolyParams(1.0, -1)
    assert PolyParams(0.0, 3).eta == 1 and PolyParams(0.0, 3).is_chebyshev


@pytest.mark.parametrize(
    "n, m, s, expected", [(2, 2, 0.5, -0.5), (3, 0, 0.9, 1.0), (4, 2, 0.5, 0.0)]
)
def test_funk_hecke_kernel_values(n, m, s, expected):
    assert funk_hecke_kernel(n, m, s) == pytest.approx(expected, abs=1e-13)


@pytest.mark.parametrize(
    "lam, m, expected", [(0.5, 0, 0.5), (1.0, 1, math.sqrt(math.pi) / 2), (0.5, 2, 0.5)]
)
def test_normalizing_constant(lam, m, expected):
    assert normalizing_constant(lam, m) == pytest.approx(expected, rel=1e-13)


@pytest.mark.parametrize("n, m, expected", [(3, 2, 5), (2, 3, 2), (5, 0, 1)])
def test_harmonic_dimension(n, m, expected):
    assert sh_dimension(n, m) == expected


@pytest.mark.parametrize("n, expected", [(2, 2 * math.pi), (3, 4 * math.pi), (4, 2 * math.pi**2)])
def test_sphere_area(n, expected):
    assert sphere_area(n) == pytest.approx(expected, rel=1e-14)


def test_zonal_harmonic_values():
    assert zonal_harmonic(3, 0, [0, 0, 1], [0.6, 0, 0.8]) == pytest.approx(sphere_area(3) ** -0.5)
    assert zonal_harmonic(3, 1, [0, 0, 1], [0, 0, 1]) == pytest.approx(math.sqrt(3 / (4 * math.pi)))
    phi = 0.4
    got = zonal_harmonic(2, 2, [0, 1], [math.sin(phi), math.cos(phi)])
    assert got == pytest.approx(math.cos(2 * phi) / math.sqrt(math.pi), rel=1e-13)


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("m", range(5))
def test_zonal_harmonic_unit_norm(n, m):
    axis = np.arange(1.0, n + 1.0)
    axis /= np.linalg.norm(axis)
    pts, wts = sphere_rule(n, 32)
    y = zonal_harmonic(n, m, axis, pts)
    assert float(y * y @ wts) == pytest.approx(1.0, abs=1e-6)


@pytest.mark.parametrize("lam", [0.0, 0.5, 1.0])
def test_orthogonality(lam):
    w = (lambda t: (1 - t * t) ** -0.5) if lam == 0 else (lambda t: (1 - t * t) ** (lam - 0.5))
    poly = (lambda m, t: chebyshev(m, t)) if lam == 0 else (lambda m, t: gegenbauer(lam, m, t))
    for m in range(4):
        for k in range(m + 1, 5):
            val, _ = integrate.quad(lambda t: poly(m, t) * poly(k, t) * w(t), -1, 1, limit=200)
            assert abs(val) < 1e-9


def test_mellin_alpha_values():
    assert mellin_alpha(0.5, 0, 1.0) == pytest.approx(1.0, rel=1e-14)
    # a denominator gamma at a pole gives an exact zero
    assert mellin_alpha(0.5, 2, 1.0) == 0
    oracle, _ = integrate.quad(lambda u: u**3 * (1 - u * u) ** 0.5 * (4 * u * u - 1), 0, 1, epsabs=1e-14)
    assert mellin_alpha(1.0, 2, 4.0).real == pytest.approx(oracle, abs=1e-10)


def _alg(f, lam):
    # int_0^1 f(u) (1-u^2)^(lam-1/2) du with the endpoint factor (1-u)^(lam-1/2) as QUADPACK weight
    val, _ = integrate.quad(
        lambda u: f(u) * (1 + u) ** (lam - 0.5), 0, 1, weight="alg", wvar=(0, lam - 0.5), epsabs=1e-13, limit=200
    )
    return val


@given(lam=st.sampled_from([0.25, 0.5, 1.0, 1.5]), m=st.integers(0, 6), x=st.floats(0.2, 6.0))
def test_mellin_alpha_matches_quadrature(lam, m, x):
    z = x + 1.0  # inside the strip for every degree
    oracle = _alg(lambda u: u ** (z - 1) * special.eval_gegenbauer(m, lam, u), lam)
    assert abs(mellin_alpha(lam, m, z) - oracle) < 1e-8


@given(lam=st.sampled_from([0.25, 0.5, 1.0, 1.5]), m=st.integers(0, 6), x=st.floats(0.3, 5.0))
def test_mellin_beta_matches_quadrature(lam, m, x):
    z = m + x
    # u^m C(1/u) is the polynomial with reversed coefficients
    reversed_poly = np.poly1d(special.gegenbauer(m, lam).coeffs[::-1])
    oracle = _alg(lambda u: u ** (z - 1 - m) * reversed_poly(u), lam)
    assert abs(mellin_beta(lam, m, z) - oracle) < 1e-8 * max(1.0, abs(oracle))


def test_mellin_strips_enforced():
    with pytest.raises(ValueError):
        mellin_alpha(1.0, 2, -0.5)
    with pytest.raises(ValueError):
        mellin_beta(1.0, 3, 2.5)
