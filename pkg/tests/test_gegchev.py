import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy import integrate, special

from gcradon import checks
from gcradon.errors import DivergentIntegral, FormInapplicable, InvalidKernelIndex
from gcradon.fracint import FracParams, frac_integral
from gcradon.gegchev import (
    GCOperator,
    check_composition,
    gc_apply,
    gc_apply_profile,
    gc_existence,
    gc_invert,
    gc_kernel_witness,
    gc_reciprocal_transfer,
    gc_reduction,
)
from gcradon.profiles import bump, constant, exponential, format_profile, gaussian, gaussian_moment, power, rational, zero


def _kernel(lam, m, x):
    return special.eval_chebyt(m, x) if lam == 0 else special.eval_gegenbauer(m, lam, x)


def _c(lam, m):
    if lam == 0:
        return math.sqrt(math.pi) / 2  # Gamma(1/2)/2 for the Chebyshev operators
    return math.gamma(2 * lam + m) * math.gamma(lam + 0.5) / (2 * math.factorial(m) * math.gamma(2 * lam))


def _quad_minus(lam, m, f, t):
    # right-sided unstarred operator from its defining integral, by QUADPACK
    def g(r):
        return _kernel(lam, m, t / r) * f(r) * r * (r + t) ** (lam - 0.5)

    val, _ = integrate.quad(g, t, t + 1, weight="alg", wvar=(lam - 0.5, 0), limit=200, epsabs=0)
    tail, _ = integrate.quad(lambda r: g(r) * (r - t) ** (lam - 0.5), t + 1, np.inf, limit=200, epsabs=0)
    return (val + tail) / _c(lam, m)


def test_degree_zero_example():
    got = gc_apply(GCOperator(0.5, 0, "minus"), gaussian(), 1.0)
    assert got == pytest.approx(math.exp(-1.0), rel=1e-12)


@pytest.mark.parametrize("lam", [0.0, 0.5, 1.0, 1.5])
@pytest.mark.parametrize("m", [0, 1, 2, 3])
def test_right_sided_matches_quadpack(lam, m):
    f = gaussian()
    for t in (0.5, 1.2):
        got = gc_apply(GCOperator(lam, m, "minus"), f, t)
        assert got == pytest.approx(_quad_minus(lam, m, lambda r: math.exp(-r * r), t), rel=1e-8, abs=1e-14)


def test_kernel_witness_examples():
    assert format_profile(gc_kernel_witness("minus", 0.5, 2, 0)) == "power(-3)"
    assert format_profile(gc_kernel_witness("plus", 0.3, 4, 2)) == "power(2)"
    with pytest.raises(InvalidKernelIndex):
        gc_kernel_witness("minus", 1.0, 3, 0)
    ts = np.array([0.5, 1.0, 2.0])
    assert np.max(np.abs(gc_apply(GCOperator(0.5, 2, "minus"), power(-3), ts))) < 1e-12
    assert np.max(np.abs(gc_apply(GCOperator(0.5, 2, "plus"), constant(1.0), ts))) < 1e-12


def test_kernel_annihilation():
    assert checks.kernel_annihilation_error() < 1e-8


def test_existence_examples():
    assert gc_existence(GCOperator(0.5, 2, "minus"), power(-3))
    assert not gc_existence(GCOperator(0.5, 2, "minus"), power(-2))
    assert gc_existence(GCOperator(0.7, 2, "plus"), power(-0.5))
    with pytest.raises(DivergentIntegral):
        gc_apply(GCOperator(0.5, 2, "minus"), power(-2), 1.0)


def test_composition_examples():
    lhs, rhs, diff = check_composition(0.5, 2, "minus", gaussian(), 1.0)
    assert rhs == pytest.approx(4 * frac_integral(FracParams(2.0, "minus"), gaussian(), 1.0), rel=1e-12)
    assert abs(diff) < 1e-6
    lhs, rhs, diff = check_composition(0.0, 3, "minus", exponential(), 0.7)
    assert rhs == pytest.approx(2 * math.exp(-0.7), rel=1e-10)
    assert abs(diff) < 1e-6
    assert check_composition(0.5, 2, "minus", zero(), 1.0) == (0.0, 0.0, 0.0)


def test_composition_right_sided():
    err = checks.composition_error((0.0, 0.5, 1.0), (2, 3), "minus", (gaussian(), rational(4)), (0.5, 2.0))
    assert err < 1e-6


def test_composition_left_sided_admissible():
    err = checks.composition_error((0.0, 0.5), (2, 3), "plus", (bump(0.5, 1.5), gaussian_moment(4)), (0.7, 2.0))
    assert err < 1e-6


def test_composition_left_sided_rejects_gaussian():
    with pytest.raises(DivergentIntegral):
        check_composition(0.5, 2, "plus", gaussian(), 1.0)


def test_inversion_examples():
    op = GCOperator(0.5, 2, "minus")
    assert gc_invert(op, gc_apply_profile(op, gaussian()), 1.0) == pytest.approx(math.exp(-1.0), rel=1e-4)
    op = GCOperator(0.0, 2, "minus")
    assert gc_invert(op, gc_apply_profile(op, exponential()), 0.5) == pytest.approx(math.exp(-0.5), rel=1e-4)
    assert gc_invert(op, zero(), 1.0) == 0.0
    with pytest.raises(FormInapplicable):
        gc_invert(op.star(), zero(), 1.0)


@pytest.mark.parametrize("lam", [0.0, 0.5, 1.0])
@pytest.mark.parametrize("m", [0, 1])
@pytest.mark.parametrize("star", [False, True])
def test_low_degree_reduction(lam, m, star):
    op = GCOperator(lam, m, "minus", star)
    ts = np.array([0.5, 1.0, 2.0])
    np.testing.assert_allclose(gc_reduction(op, gaussian(), ts), gc_apply(op, gaussian(), ts), rtol=1e-10)


@given(lam=st.sampled_from([0.0, 0.5, 1.0]), m=st.integers(0, 4), a=st.floats(-3, 3), b=st.floats(-3, 3))
def test_linearity(lam, m, a, b):
    op = GCOperator(lam, m, "minus")
    f, g = gaussian(), rational(5)
    ts = np.array([0.6, 1.4])
    lhs = gc_apply(op, a * f + b * g, ts)
    rhs = a * gc_apply(op, f, ts) + b * gc_apply(op, g, ts)
    np.testing.assert_allclose(lhs, rhs, rtol=1e-10, atol=1e-12)


@pytest.mark.parametrize("starred", [False, True])
def test_reciprocal_transfer(starred):
    f = bump(0.3, 1.2)
    assert gc_reciprocal_transfer(f, 0.5, 2, np.array([0.5, 0.9]), starred) < 1e-7
    assert gc_reciprocal_transfer(zero(), 0.5, 2, np.array([0.5]), starred) == 0.0


def test_reciprocal_transfer_of_witness():
    # the reflection carries the left-sided witness to the right-sided one
    assert gc_reciprocal_transfer(power(0.0), 0.5, 2, np.array([0.5, 2.0])) < 1e-10


def test_operator_validation():
    with pytest.raises(ValueError):
        GCOperator(0.5, 2, "left")
    with pytest.raises(ValueError):
        GCOperator(-1.0, 2)
    assert GCOperator(0.5, 3).star().starred and GCOperator(0.5, 3).eta == 1
