import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gcradon.errors import ParseError
from gcradon.profiles import bump, format_profile, gaussian, parse_profile, power, zero

NAMES = st.sampled_from(
    ["gaussian", "exponential", "two_sided", "power(-3)", "power(2.5)", "rational(3)", "gaussian_moment(2)",
     "bump(0.5,1.5)", "indicator(1)", "kernel_witness(0,0.5,2,0)", "kernel_witness(1,1,4,2)"]
)
COEFFS = st.sampled_from(["", "2*", "-3*", "0.5*"])


@given(st.lists(st.tuples(COEFFS, NAMES), min_size=1, max_size=3))
def test_format_parse_round_trip(terms):
    spec = "+".join(c + n for c, n in terms)
    p = parse_profile(spec)
    q = parse_profile(format_profile(p))
    assert format_profile(q) == format_profile(p)
    r = np.array([0.3, 0.9, 1.2, 2.0])
    np.testing.assert_allclose(q(r), p(r), rtol=0, atol=0)
    assert (q.sing0, q.decay, q.support) == (p.sing0, p.decay, p.support)


def test_canonical_form_drops_whitespace():
    assert format_profile(parse_profile(" power( -3 ) + 2 * gaussian ")) == "power(-3)+2*gaussian"


def test_builtin_exponents():
    g = parse_profile("gaussian")
    assert g.sing0 == 0 and g.decay == math.inf
    np.testing.assert_allclose(g(np.array([0.5, 2.0])), np.exp(-np.array([0.25, 4.0])))
    p = parse_profile("power(-3)")
    assert (p.sing0, p.decay) == (-3, 3)
    assert p(np.array([2.0]))[0] == pytest.approx(0.125)


def test_bump_support():
    b = bump(0.5, 1.5)
    r = np.linspace(0.0, 2.0, 2001)
    vals = b(r)
    inside = (r > 0.5) & (r < 1.5)
    assert np.all(vals[~inside] == 0)
    assert np.all(vals[inside] >= 0)
    # positive away from the flat edges, where the values underflow
    assert np.all(vals[(r > 0.52) & (r < 1.48)] > 0)
    assert b.support == (0.5, 1.5)


@pytest.mark.parametrize("spec", ["power(-3)", "power(1.5)", "rational(4)"])
def test_declared_exponents_match_slopes(spec):
    p = parse_profile(spec)
    small = np.geomspace(1e-4, 1e-2, 20)
    large = np.geomspace(1e2, 1e4, 20)
    slope0 = np.polyfit(np.log(small), np.log(np.abs(p(small))), 1)[0]
    slope_inf = np.polyfit(np.log(large), np.log(np.abs(p(large))), 1)[0]
    assert slope0 >= p.sing0 - 0.2
    assert slope_inf <= -p.decay + 0.2


@pytest.mark.parametrize(
    "spec, position",
    [("", 0), ("bogus", 0), ("power(", 6), ("power(1", 7), ("gaussian+", 9), ("gaussian x", 9), ("2*", 2)],
)
def test_parse_errors_report_position(spec, position):
    with pytest.raises(ParseError) as info:
        parse_profile(spec)
    assert info.value.position == position
    assert info.value.expected


def test_invalid_kernel_witness_is_parse_error():
    with pytest.raises(ParseError):
        parse_profile("kernel_witness(0,1,3,0)")


def test_arithmetic():
    p = 2 * power(-3) + zero()
    assert format_profile(p) == "2*power(-3)"
    assert (power(-2) - power(-4)).decay == 2
    assert (gaussian() * 0).is_zero
