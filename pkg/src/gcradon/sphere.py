"""Product quadrature on spheres and small frame utilities.

``sphere_rule(k, ...)`` integrates over the unit sphere ``S^{k-1}`` in R^k
with respect to surface area.  The rule is a product: Gauss-Legendre panels
in the polar cosine ``s = axis . theta`` times a rule on the equatorial
``S^{k-2}``, bottoming out in Gauss-Legendre on arcs of the circle.  Integrands that are
smooth except across level sets ``s = c`` are integrated to full accuracy
when those ``c`` are passed as ``cuts``.  The panels touching the poles
``s = +-1`` use ``tau = sqrt(1 -+ s)`` as variable, so
integrands that are smooth in the distance to the pole (rather than in ``s``)
and singularities like ``(1 - s)^(-1/2)`` are also integrated spectrally.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np
from scipy import special

__all__ = ["complete_basis", "fibonacci_sphere", "sphere_rule", "unit"]


def unit(v, name: str = "vector") -> np.ndarray:
    """Normalize ``v`` along the last axis; zero vectors raise ``ValueError``."""
    v = np.asarray(v, dtype=float)
    norm = np.linalg.norm(v, axis=-1, keepdims=True)
    if np.any(norm == 0):
        raise ValueError(f"{name} must be nonzero")
    return v / norm


def complete_basis(axis) -> np.ndarray:
    """Orthogonal matrix whose first column is the unit vector ``axis``."""
    a = unit(axis, "axis")
    k = a.size
    q, _ = np.linalg.qr(np.column_stack([a, np.eye(k)]))
    q = q[:, :k]
    if q[:, 0] @ a < 0:
        q = -q
    return q


@lru_cache(maxsize=128)
def _gl(n: int):
    return special.roots_legendre(n)


def _interval_rule(n: int, lo: float, hi: float, e: float):
    # int_lo^hi g(s) (1-s^2)^e ds; a panel touching +-1 is mapped to tau = sqrt(1 -+ s),
    # which absorbs the weight and any dependence on the distance to the pole
    x, w = _gl(n)
    if hi == 1.0 or lo == -1.0:
        sign = 1.0 if hi == 1.0 else -1.0
        top = np.sqrt(hi - lo)
        tau = 0.5 * top * (1.0 + x)
        s = sign * (1.0 - tau * tau)
        wt = w * top * tau * (tau * tau) ** e * (2.0 - tau * tau) ** e
        return s, wt
    half = 0.5 * (hi - lo)
    s = lo + half * (1.0 + x)
    return s, w * half * (1.0 - s * s) ** e


def _circle(nodes: int, cuts: tuple):
    # angles measured from the axis; arcs split at +-arccos(c) and quarter points
    marks = {0.0, 0.5 * np.pi, np.pi}
    marks.update(float(np.arccos(c)) for c in cuts if -1.0 < c < 1.0)
    edges = np.array(sorted(marks))
    x, w = _gl(nodes)
    phis, wts = [], []
    for a, b in zip(edges[:-1], edges[1:]):
        half = 0.5 * (b - a)
        phis.append(a + half * (1.0 + x))
        wts.append(w * half)
    phi = np.concatenate(phis)
    wt = np.concatenate(wts)
    phi = np.concatenate([phi, -phi[::-1]])
    wt = np.concatenate([wt, wt[::-1]])
    return np.column_stack([np.cos(phi), np.sin(phi)]), wt


@lru_cache(maxsize=64)
def _canonical_rule(k: int, nodes: int, cuts: tuple):
    # rule around the axis e_1
    if k == 2:
        pts, wts = _circle(nodes, cuts)
    else:
        e = 0.5 * (k - 3)
        marks = {-1.0, 0.0, 1.0}
        marks.update(c for c in cuts if -1.0 < c < 1.0)
        edges = sorted(marks)
        ss, ws = [], []
        for a, b in zip(edges[:-1], edges[1:]):
            s, w = _interval_rule(nodes, a, b, e)
            ss.append(s)
            ws.append(w)
        s = np.concatenate(ss)
        w = np.concatenate(ws)
        sub_pts, sub_w = _canonical_rule(k - 1, nodes, ())
        rho = np.sqrt(np.clip(1.0 - s * s, 0.0, None))
        pts = np.concatenate(
            [np.column_stack([np.full(sub_pts.shape[0], si), ri * sub_pts]) for si, ri in zip(s, rho)]
        )
        wts = np.concatenate([wi * sub_w for wi in w])
    pts.setflags(write=False)
    wts.setflags(write=False)
    return pts, wts


def sphere_rule(k: int, nodes: int = 24, axis=None, cuts=()) -> tuple[np.ndarray, np.ndarray]:
    """Points and area weights on ``S^{k-1}``, refined around ``axis``.

    Parameters
    ----------
    k : int
        Ambient dimension; ``k = 1`` gives ``S^0 = {-1, 1}`` with counting measure.
    nodes : int
        Gauss nodes per panel in each polar variable.
    axis : array_like, optional
        Polar axis (default ``e_k``).
    cuts : sequence of float
        Values of ``axis . theta`` across which the integrand is not smooth.

    Returns
    -------
    points : ndarray, shape (N, k)
    weights : ndarray, shape (N,)
        Summing to the area of ``S^{k-1}``.
    """
    if k < 1:
        raise ValueError("sphere dimension k must be at least 1")
    if k == 1:
        return np.array([[1.0], [-1.0]]), np.ones(2)
    if axis is None:
        axis = np.eye(k)[-1]
    cuts = tuple(sorted(float(c) for c in cuts if -1.0 < c < 1.0))
    pts, wts = _canonical_rule(k, int(nodes), cuts)
    return pts @ complete_basis(axis).T, wts


def fibonacci_sphere(count: int) -> np.ndarray:
    """Quasi-uniform points on ``S^2`` (Fibonacci lattice)."""
    if count < 1:
        raise ValueError("count must be positive")
    i = np.arange(count) + 0.5
    z = 1.0 - 2.0 * i / count
    phi = np.pi * (1.0 + 5**0.5) * i
    r = np.sqrt(1.0 - z * z)
    return np.column_stack([r * np.cos(phi), r * np.sin(phi), z])
