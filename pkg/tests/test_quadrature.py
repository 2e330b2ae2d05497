import math

import numpy as np
import pytest
from scipy import special

from gcradon.errors import IntegrationBudgetExceeded
from gcradon.quadrature import QuadratureConfig, chebyshev_derivative, integrate_unit
from gcradon.sphere import complete_basis, fibonacci_sphere, sphere_rule


@pytest.mark.parametrize("a, b", [(-0.5, 0.0), (0.3, -0.7), (-0.9, 2.5), (0.0, 0.0)])
def test_jacobi_weights_integrate_beta(a, b):
    est = integrate_unit(lambda u: np.cos(u), end_exp=a, start_exp=b)
    # int_0^1 cos(u) (1-u)^a u^b du as a hypergeometric series
    k = np.arange(30)
    series = (-1.0) ** k * special.beta(a + 1, b + 2 * k + 1) / special.factorial(2 * k)
    assert float(est.value) == pytest.approx(float(series.sum()), rel=1e-12)


def test_budget_exceeded():
    cfg = QuadratureConfig(rtol=1e-300, atol=0.0, max_doublings=1)
    with pytest.raises(IntegrationBudgetExceeded):
        integrate_unit(lambda u: np.abs(u - 1 / 3), cfg=cfg)


def test_chebyshev_derivative():
    d = chebyshev_derivative(np.exp, 1.3, 2)
    assert d == pytest.approx(math.exp(1.3), rel=1e-9)
    ds = chebyshev_derivative(lambda t: np.exp(-t * t), 0.9, 1, squared=True)
    assert ds == pytest.approx(-math.exp(-0.81), rel=1e-9)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_sphere_rule_area(k):
    _, w = sphere_rule(k, 16)
    area = 2.0 if k == 1 else 2 * math.pi ** (k / 2) / math.gamma(k / 2)
    assert w.sum() == pytest.approx(area, rel=1e-13)


def test_sphere_rule_moments(rng):
    axis = rng.standard_normal(3)
    pts, w = sphere_rule(3, 16, axis=axis, cuts=(0.3,))
    assert np.allclose(np.linalg.norm(pts, axis=1), 1.0)
    # int x_i^2 = 4 pi / 3 and int x_i^4 = 4 pi / 5
    assert (pts[:, 0] ** 2) @ w == pytest.approx(4 * math.pi / 3, rel=1e-12)
    assert (pts[:, 2] ** 4) @ w == pytest.approx(4 * math.pi / 5, rel=1e-12)


def test_frames():
    q = complete_basis([1.0, 2.0, -2.0])
    assert np.allclose(q.T @ q, np.eye(3))
    assert np.allclose(q[:, 0], np.array([1.0, 2.0, -2.0]) / 3)
    p = fibonacci_sphere(50)
    assert np.allclose(np.linalg.norm(p, axis=1), 1.0)
