"""Composite Gauss-Jacobi rules for weakly singular integrals on (0, 1).

Every one-sided operator in the package is reduced to

    int_lo^hi g(u) (1-u)^a u^b du,    0 <= lo < hi <= 1,

where ``g`` is smooth on the closed interval.  The interval is cut into
panels graded geometrically toward ``u = 0``; the panel touching ``u = 1``
carries the Jacobi weight ``(1-u)^a`` and the panel touching ``u = 0``
carries ``u^b``.  Interior panels use Gauss-Legendre with the weight folded
into the integrand.  Each estimate is computed at ``n`` and ``2n`` nodes per
panel and doubled until the two agree.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, NamedTuple

import numpy as np
from numpy.polynomial import chebyshev as npcheb
from scipy import special

from .errors import IntegrationBudgetExceeded

__all__ = [
    "Estimate",
    "QuadratureConfig",
    "chebyshev_derivative",
    "integrate_unit",
]


@dataclass(frozen=True)
class QuadratureConfig:
    """Tolerances and budgets shared by every integrator.

    Parameters
    ----------
    nodes : int
        Gauss nodes per panel at the first resolution.
    levels : int
        Number of geometric panels ``[2^-j-1, 2^-j]`` toward ``u = 0``.
    rtol : float
        Accepted discrepancy between the ``n`` and ``2n`` estimates, relative
        to the integral of ``|integrand|``.
    max_doublings : int
        Node doublings before :class:`IntegrationBudgetExceeded` is raised.
    check : bool
        If False a single ``2n`` estimate is returned without comparison.
        Used for profiles evaluated inside another integral.
    deriv_degree : int
        Degree of the local Chebyshev interpolant used for derivatives.
    deriv_window : float
        Relative half width of the interpolation window around ``t``.
    atol : float
        Absolute error always accepted.  Far below any value of interest; it
        only stops refinement on integrands that are numerically zero, such
        as the flat edge of a compactly supported bump.
    """

    nodes: int = 16
    levels: int = 12
    rtol: float = 1e-12
    max_doublings: int = 4
    check: bool = True
    deriv_degree: int = 16
    deriv_window: float = 0.2
    atol: float = 1e-100

    def replace(self, **changes) -> "QuadratureConfig":
        return dataclasses.replace(self, **changes)

    def inner(self) -> "QuadratureConfig":
        """Configuration for evaluations nested inside another quadrature."""
        return self.replace(check=False)


DEFAULT_CONFIG = QuadratureConfig()


class Estimate(NamedTuple):
    """Quadrature result: value, error estimate and ``int |integrand|``."""

    value: np.ndarray
    error: np.ndarray
    scale: np.ndarray


@lru_cache(maxsize=256)
def _jacobi_rule(n: int, a: float, b: float):
    # weight (1-x)^a (1+x)^b on [-1, 1]
    if a == 0.0 and b == 0.0:
        x, w = special.roots_legendre(n)
    else:
        x, w = special.roots_jacobi(n, a, b)
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


def _edges(lo: float, hi: float, levels: int, breaks, end_levels: int = 0) -> np.ndarray:
    grid = [0.0] + [2.0**-j for j in range(levels, 0, -1)] + [1.0]
    grid += [1.0 - 2.0**-j for j in range(2, end_levels + 2)]
    pts = {lo, hi}
    pts.update(p for p in grid if lo < p < hi)
    pts.update(float(p) for p in breaks if lo < p < hi)
    return np.array(sorted(pts))


@lru_cache(maxsize=4096)
def _composite_rule(n: int, a: float, b: float, lo: float, hi: float, levels: int, breaks: tuple, end_levels: int = 0):
    """Nodes and weights for ``int_lo^hi g(u) (1-u)^a u^b du``."""
    edges = _edges(lo, hi, levels, breaks, end_levels)
    nodes, weights = [], []
    for left, right in zip(edges[:-1], edges[1:]):
        ja = a if right == 1.0 else 0.0
        jb = b if left == 0.0 else 0.0
        x, w = _jacobi_rule(n, ja, jb)
        half = 0.5 * (right - left)
        u = left + half * (1.0 + x)
        wt = w * half ** (1.0 + ja + jb)
        if ja == 0.0 and a != 0.0:
            wt = wt * (1.0 - u) ** a
        if jb == 0.0 and b != 0.0:
            wt = wt * u**b
        nodes.append(u)
        weights.append(wt)
    u = np.concatenate(nodes)
    w = np.concatenate(weights)
    u.setflags(write=False)
    w.setflags(write=False)
    return u, w


def integrate_unit(
    integrand: Callable[[np.ndarray], np.ndarray],
    *,
    end_exp: float = 0.0,
    start_exp: float = 0.0,
    lo: float = 0.0,
    hi: float = 1.0,
    breaks: tuple = (),
    end_levels: int = 0,
    cfg: QuadratureConfig = DEFAULT_CONFIG,
) -> Estimate:
    """Integrate ``integrand(u) (1-u)^end_exp u^start_exp`` over ``[lo, hi]``.

    ``integrand`` receives a 1-D array of nodes and returns an array whose
    last axis runs over those nodes; leading axes are batch dimensions.
    ``end_levels`` adds panels ``[1-2^-j, 1-2^-j-1]`` graded toward ``u = 1``.
    """
    if not (0.0 <= lo <= hi <= 1.0):
        raise ValueError(f"integration limits must satisfy 0 <= lo <= hi <= 1, got {lo}, {hi}")
    if hi == lo:
        zero = np.zeros(np.shape(integrand(np.array([0.5 * (lo + hi)])))[:-1])
        return Estimate(zero, zero, zero)
    key = (float(end_exp), float(start_exp), float(lo), float(hi), cfg.levels, tuple(breaks), int(end_levels))

    def estimate(n):
        u, w = _composite_rule(n, *key)
        vals = np.asarray(integrand(u), dtype=float)
        return vals @ w, np.abs(vals) @ np.abs(w)

    n = cfg.nodes
    if not cfg.check:
        value, scale = estimate(2 * n)
        return Estimate(value, np.zeros_like(value), scale)
    coarse, _ = estimate(n)
    for _ in range(cfg.max_doublings + 1):
        fine, scale = estimate(2 * n)
        err = np.abs(fine - coarse)
        if np.all(err <= np.maximum(cfg.rtol * scale, cfg.atol)):
            return Estimate(fine, err, scale)
        n, coarse = 2 * n, fine
    raise IntegrationBudgetExceeded(
        f"quadrature did not converge: max error {float(np.max(err)):.3e} "
        f"vs tolerance {cfg.rtol:.1e} x scale after {cfg.max_doublings} doublings"
    )


def chebyshev_derivative(
    func: Callable[[np.ndarray], np.ndarray],
    t: float,
    order: int,
    *,
    squared: bool = False,
    cfg: QuadratureConfig = DEFAULT_CONFIG,
) -> float:
    """``order``-th derivative of ``func`` at ``t`` from a local interpolant.

    The interpolant has degree ``cfg.deriv_degree`` on
    ``[(1-w) t, (1+w) t]`` with ``w = cfg.deriv_window``.  With
    ``squared=True`` the derivative is taken in ``s = t**2``, i.e. it is
    ``((1/2t) d/dt)^order func``.  Trailing Chebyshev coefficients below the
    noise level are dropped before differentiating.
    """
    if order == 0:
        return float(np.asarray(func(np.array([t])))[0])
    w = cfg.deriv_window
    if squared:
        lo, hi = ((1 - w) * t) ** 2, ((1 + w) * t) ** 2
        at = t * t

        def g(s):
            return np.asarray(func(np.sqrt(s)), dtype=float)

    else:
        lo, hi, at = (1 - w) * t, (1 + w) * t, t

        def g(s):
            return np.asarray(func(s), dtype=float)

    deg = cfg.deriv_degree
    x = np.cos(np.pi * (np.arange(deg + 1) + 0.5) / (deg + 1))
    s = 0.5 * (hi + lo) + 0.5 * (hi - lo) * x
    coef = npcheb.chebfit(x, g(s), deg)
    floor = 1e-14 * np.max(np.abs(coef))
    keep = np.nonzero(np.abs(coef) > floor)[0]
    coef = coef[: keep[-1] + 1] if keep.size else coef[:1]
    dcoef = npcheb.chebder(coef, order, scl=2.0 / (hi - lo))
    xa = (2.0 * at - (hi + lo)) / (hi - lo)
    return float(npcheb.chebval(xa, dcoef))
