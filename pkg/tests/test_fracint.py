import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gcradon import checks
from gcradon.errors import DivergentIntegral, FormInapplicable, NonPositiveT
from gcradon.fracint import FracParams, frac_derivative, frac_existence, frac_integral, frac_integral_profile
from gcradon.profiles import constant, exponential, gaussian, power, rational, zero


def test_plain_integral_of_one():
    assert frac_integral(FracParams(1.0, "plus", "rl"), constant(1.0), 2.0) == pytest.approx(2.0, rel=1e-13)


@given(alpha=st.floats(0.1, 3.0), t=st.floats(0.1, 5.0))
def test_left_sided_constant_is_power(alpha, t):
    got = frac_integral(FracParams(alpha, "plus", "rl"), constant(1.0), t)
    assert got == pytest.approx(t**alpha / math.gamma(alpha + 1), rel=1e-11)


@given(alpha=st.floats(0.1, 2.5), p=st.floats(0.5, 4.0), t=st.floats(0.2, 4.0))
def test_right_sided_power(alpha, p, t):
    p = p + alpha  # existence needs p > alpha
    got = frac_integral(FracParams(alpha, "minus", "rl"), power(-p), t)
    exact = t ** (alpha - p) * math.exp(math.lgamma(p - alpha) - math.lgamma(p))
    assert got == pytest.approx(exact, rel=1e-10)


@given(alpha=st.floats(0.1, 2.5), p=st.floats(0.5, 4.0), t=st.floats(0.2, 4.0))
def test_erdelyi_kober_power(alpha, p, t):
    p = p + 2 * alpha
    got = frac_integral(FracParams(alpha, "minus", "ek"), power(-p), t)
    exact = t ** (2 * alpha - p) * math.exp(math.lgamma(p / 2 - alpha) - math.lgamma(p / 2))
    assert got == pytest.approx(exact, rel=1e-10)


def test_erdelyi_kober_gaussian():
    got = frac_integral(FracParams(1.0, "minus", "ek"), gaussian(), 1.3)
    assert got == pytest.approx(math.exp(-1.69), rel=1e-12)


def test_existence_predicates():
    assert frac_existence(FracParams(1.0, "minus", "rl"), exponential())
    assert not frac_existence(FracParams(1.0, "minus", "ek"), power(-2.0))
    assert frac_existence(FracParams(0.5, "plus", "rl"), power(-0.5))
    with pytest.raises(DivergentIntegral):
        frac_integral(FracParams(1.0, "minus", "ek"), power(-2.0), 1.0)


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        FracParams(0.0)
    with pytest.raises(NonPositiveT):
        frac_integral(FracParams(0.5), gaussian(), [1.0, 0.0])


def test_zero_profile():
    assert np.all(frac_integral(FracParams(0.7, "minus", "ek"), zero(), [0.5, 2.0]) == 0)


@pytest.mark.parametrize("side", ["plus", "minus"])
@pytest.mark.parametrize("variant", ["rl", "ek"])
def test_semigroup(side, variant):
    a, b = 0.4, 0.9
    f = rational(4)
    inner = frac_integral_profile(FracParams(b, side, variant), f)
    ts = np.array([0.5, 1.0, 2.0])
    lhs = frac_integral(FracParams(a, side, variant), inner, ts)
    rhs = frac_integral(FracParams(a + b, side, variant), f, ts)
    np.testing.assert_allclose(lhs, rhs, rtol=1e-6)


def test_derivative_examples():
    got = frac_derivative(FracParams(1.0, "minus", "ek"), gaussian(), 0.9, "integer_power")
    assert got == pytest.approx(math.exp(-0.81), rel=1e-9)
    assert frac_derivative(FracParams(1.0, "plus", "rl"), power(1.0), 3.0) == pytest.approx(1.0, rel=1e-9)


def test_erdelyi_kober_round_trip():
    p = FracParams(0.5, "minus", "ek")
    g = frac_integral_profile(p, gaussian())
    assert frac_derivative(p, g, 1.0, "standard") == pytest.approx(math.exp(-1.0), rel=1e-6)


def test_integer_form_needs_integer_order():
    with pytest.raises(FormInapplicable):
        frac_derivative(FracParams(0.5, "minus", "ek"), gaussian(), 1.0, "integer_power")


@pytest.mark.parametrize("case", checks.left_inverse_cases()[:6], ids=lambda c: f"{c[0].side}-{c[0].variant}-{c[1]}")
def test_left_inverse(case):
    assert checks.left_inverse_error([case], ts=(1.0,)) < 1e-4
