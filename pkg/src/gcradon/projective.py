"""Radon-type transforms that reduce to the hyperplane transform.

Four transforms are covered, each computed by direct quadrature over the
submanifolds and through a change of variables that turns it into the
hyperplane Radon transform ``R`` (or its dual) of an explicitly transferred
function:

* ``Q``: normalized means over spheres through the origin of R^n,
* ``F``: Funk transform, great-subsphere means on S^n (probability measure),
* slice transform: integrals over the subspheres of S^n through the north
  pole ``e = e_{n+1}`` (unnormalized surface measure),
* totally geodesic transform on the hyperboloid model of hyperbolic space.

Functions on the curved spaces that come from a single harmonic profile on
R^n are described by :class:`ChartProfile`; for these the transfer route
can also be evaluated with the profile machinery of :mod:`radon_sh`
(``path="profile"``), which gives a third independent value.

Conventions: ``S^n`` lives in R^{n+1} with north pole ``e``; hyperbolic
points are ambient vectors ``(x~, x_{n+1})`` with ``[x, x] = x_{n+1}^2 -
|x~|^2 = 1`` and ``x_{n+1} > 0``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .compare import Comparison
from .errors import DegenerateSphere, DivergentIntegral, InvalidKernelIndex, OriginPoint, PoleCoordinate
from .fracint import Existence
from .gegchev import reciprocal
from .profiles import INF, RadialProfile, gaussian, power, zero
from .quadrature import QuadratureConfig
from .radon_sh import (
    HarmonicProfile,
    HyperplaneCoord,
    _quad,
    _radial_pieces,
    dual_radon_brute_force,
    dual_radon_profile,
    duality_pairing_check,
    kernel_profile,
    radon_brute_force,
    radon_forward_profile,
    radon_invert_profile,
    radon_profile_forward,
    radon_radial,
)
from .specfun import sphere_area
from .sphere import complete_basis, fibonacci_sphere, sphere_rule, unit

__all__ = [
    "ChartProfile",
    "GeodesicSphereCoord",
    "HyperbolicDualProfile",
    "MEASURE_IDENTITIES",
    "ProjectiveMap",
    "funk_existence",
    "funk_forward",
    "funk_kernel_profile",
    "hyperbolic_dual",
    "hyperbolic_existence",
    "hyperbolic_forward",
    "hyperbolic_kernel_profile",
    "measure_transfer_check",
    "slice_existence",
    "slice_forward",
    "slice_invert_profile",
    "slice_kernel_profile",
    "slice_profile",
    "slice_zonal_forward",
    "sphere_mean_existence",
    "sphere_mean_forward",
    "sphere_mean_invert_profile",
    "sphere_mean_kernel_profile",
    "sphere_mean_profile",
    "support_scan_projective",
]

# hyperbolic radial integrals stop here; integrands decay at least like
# exp(-2 s) beyond the support of the chart function, so the tail is below
# exp(-80) relative to the bulk
HYPERBOLIC_RMAX = 40.0
# tolerance for points claimed to lie on a sphere or a hyperboloid
ON_MANIFOLD_TOL = 1e-10
# smallest slice radius psi accepted
MIN_SLICE_PSI = 1e-8

_PATHS = {
    "sphere_mean": ("direct", "via_dual", "via_radon", "profile"),
    "funk": ("direct", "via_radon", "profile"),
    "slice": ("direct", "via_radon", "profile"),
    "hyperbolic": ("direct", "via_radon", "profile"),
    "hyperbolic_dual": ("direct", "via_dual_radon", "profile"),
}


def _check_path(which: str, path: str):
    if path not in _PATHS[which]:
        raise ValueError(f"unknown path {path!r} for {which}; expected one of {_PATHS[which]}")


def _points(p, dim: int, name: str = "point") -> np.ndarray:
    p = np.asarray(p, dtype=float)
    if p.shape[-1] != dim:
        raise ValueError(f"{name} must have {dim} coordinates, got shape {p.shape}")
    return p


def _north(n: int) -> np.ndarray:
    return np.eye(n + 1)[-1]


def _mink(x, y) -> np.ndarray:
    # [x, y] = x_{n+1} y_{n+1} - <x~, y~>
    return x[..., -1] * y[..., -1] - np.sum(x[..., :-1] * y[..., :-1], axis=-1)


def _radii(u: RadialProfile, hi: float = INF) -> tuple:
    return tuple(sorted({b for b in (*u.breaks, *u.support) if 0.0 < b < hi}))


def _dilate(f: RadialProfile, c: float) -> RadialProfile:
    """The profile ``r -> f(c r)``."""
    func = f.func
    lo, hi = f.support
    return RadialProfile(
        lambda r: func(c * np.asarray(r, dtype=float)),
        f.sing0,
        f.decay,
        "",
        (lo / c, hi / c),
        tuple(b / c for b in f.breaks),
    )


def _weighted(f: RadialProfile, w: Callable, decay_gain: float) -> RadialProfile:
    """``r -> w(r) f(r)`` for a smooth positive ``w`` with ``w(0) != 0`` and ``w ~ r^-decay_gain``."""
    func = f.func
    return RadialProfile(
        lambda r: w(np.asarray(r, dtype=float)) * func(r),
        f.sing0,
        f.decay + decay_gain,
        "",
        f.support,
        f.breaks,
    )


def _truncate(f: RadialProfile, b: float) -> RadialProfile:
    """``f`` restricted to ``r <= b``."""
    func = f.func
    lo, hi = f.support
    return RadialProfile(
        lambda r: np.where(np.asarray(r) <= b, func(np.minimum(r, b)), 0.0),
        f.sing0,
        INF,
        "",
        (lo, min(hi, b)),
        tuple(x for x in f.breaks if x < b),
    )


def _ball_integral(k: int, func, lo: float = 0.0, hi: float = INF, breaks=(), nodes: int = 24) -> float:
    """``int_{lo < |x| < hi} func(x) dx`` over R^k: QUADPACK in ``|x|`` times a sphere rule."""
    pts, wts = sphere_rule(k, nodes)
    edges = sorted({lo, *[b for b in breaks if lo < b < hi]})

    def shell(r):
        return r ** (k - 1) * float(np.asarray(func(r * pts), dtype=float) @ wts)

    bounds = [*edges, hi]
    return sum(_quad(shell, a, b) for a, b in zip(bounds[:-1], bounds[1:]))


def _directions(n: int, count: int) -> np.ndarray:
    # deterministic, well spread unit vectors avoiding the coordinate axes
    if n == 2:
        ang = 2.0 * np.pi * (np.arange(count) + 0.3) / count
        return np.column_stack([np.cos(ang), np.sin(ang)])
    if n == 3:
        return fibonacci_sphere(count)
    rng = np.random.default_rng(count)
    return unit(rng.standard_normal((count, n)))


# ---------------------------------------------------------------------------
# Maps and coordinates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ProjectiveMap:
    """One of the changes of variables linking the transforms to ``R``.

    ``kind`` selects

    * ``"sphere_mean_AB"``: ``x -> (x/|x|, 1/|x|)``, the point-to-hyperplane
      correspondence behind ``Q``; points of ``Z_n`` are stored as
      ``(theta, t)`` rows of length ``n + 1``; the inverse is ``(theta, t) ->
      theta/t``.
    * ``"funk_mu"``: ``mu(x) = (x + e)/|x + e|`` from R^n onto the open upper
      hemisphere of S^n; inverse ``theta -> theta'/theta_{n+1}``.
    * ``"slice_nu"``: ``nu(x) = (2x + (|x|^2 - 1) e)/(|x|^2 + 1)`` from R^n onto
      ``S^n minus {e}``; the inverse is stereographic projection from ``e``.
    * ``"hyperbolic_gnomonic"``: ``x -> x~/x_{n+1}`` from the hyperboloid onto
      the open unit ball; inverse ``y -> (y, 1)/sqrt(1 - |y|^2)``.
    """

    kind: str
    n: int

    KINDS = ("sphere_mean_AB", "funk_mu", "slice_nu", "hyperbolic_gnomonic")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise ValueError(f"unknown map kind {self.kind!r}")
        if int(self.n) != self.n or self.n < 2:
            raise ValueError("n must be an integer >= 2")

    @property
    def dims(self) -> tuple[int, int]:
        """Coordinate lengths of the domain and the codomain."""
        n = self.n
        return {
            "sphere_mean_AB": (n, n + 1),
            "funk_mu": (n, n + 1),
            "slice_nu": (n, n + 1),
            "hyperbolic_gnomonic": (n + 1, n),
        }[self.kind]

    def forward(self, p) -> np.ndarray:
        p = _points(p, self.dims[0])
        e_last = p[..., -1:]
        if self.kind == "sphere_mean_AB":
            r = np.linalg.norm(p, axis=-1, keepdims=True)
            if np.any(r == 0):
                raise OriginPoint("the origin has no associated hyperplane")
            return np.concatenate([p / r, 1.0 / r], axis=-1)
        if self.kind == "funk_mu":
            q = np.concatenate([p, np.ones(p.shape[:-1] + (1,))], axis=-1)
            return q / np.linalg.norm(q, axis=-1, keepdims=True)
        if self.kind == "slice_nu":
            r2 = np.sum(p * p, axis=-1, keepdims=True)
            return np.concatenate([2.0 * p, r2 - 1.0], axis=-1) / (r2 + 1.0)
        self._check_hyperboloid(p)
        return p[..., :-1] / e_last

    def inverse(self, q) -> np.ndarray:
        q = _points(q, self.dims[1])
        last = q[..., -1:]
        if self.kind == "sphere_mean_AB":
            if np.any(last == 0):
                raise PoleCoordinate("hyperplanes through the origin have no associated point")
            return q[..., :-1] / last
        if self.kind == "funk_mu":
            self._check_sphere(q)
            if np.any(last <= 0):
                raise PoleCoordinate("funk_mu inverts on the open upper hemisphere only")
            return q[..., :-1] / last
        if self.kind == "slice_nu":
            self._check_sphere(q)
            if np.any(last >= 1.0):
                raise PoleCoordinate("the north pole has no stereographic image")
            return q[..., :-1] / (1.0 - last)
        r2 = np.sum(q * q, axis=-1, keepdims=True)
        if np.any(r2 >= 1.0):
            raise ValueError("gnomonic coordinates must lie in the open unit ball")
        x = np.concatenate([q, np.ones(q.shape[:-1] + (1,))], axis=-1) / np.sqrt(1.0 - r2)
        return _reproject(x)

    @staticmethod
    def _check_sphere(q):
        if np.any(np.abs(np.linalg.norm(q, axis=-1) - 1.0) > ON_MANIFOLD_TOL):
            raise ValueError("points must lie on the unit sphere")

    @staticmethod
    def _check_hyperboloid(x):
        if np.any(np.abs(_mink(x, x) - 1.0) > ON_MANIFOLD_TOL) or np.any(x[..., -1] <= 0):
            raise ValueError("points must lie on the upper sheet [x, x] = 1")


def _reproject(x: np.ndarray) -> np.ndarray:
    # restore [x, x] = 1 exactly in the last coordinate
    return np.concatenate([x[..., :-1], np.sqrt(1.0 + np.sum(x[..., :-1] ** 2, axis=-1, keepdims=True))], axis=-1)


def hyperbolic_point(theta, r) -> np.ndarray:
    """``theta sh r + e ch r`` on the hyperboloid."""
    theta = unit(theta, "theta")
    r = np.asarray(r, dtype=float)
    return np.concatenate([theta * np.sinh(r)[..., None], np.cosh(r)[..., None]], axis=-1)


@dataclass(frozen=True)
class GeodesicSphereCoord:
    """Parameters of a submanifold integrated over by a transform.

    Built with one of the constructors:

    * :meth:`slice` ``(theta, psi)``: the sphere ``{eta : eta . xi = cos psi}``
      with center ``xi = theta sin psi + e cos psi`` on S^n; ``psi`` in
      ``(0, pi/2]``.
    * :meth:`hyperbolic` ``(sigma, rho)``: the totally geodesic hypersurface
      ``[x, xi] = 0`` with ``xi = sigma ch rho + e sh rho``.
    * :meth:`funk` ``(omega)``: the great subsphere ``omega^perp`` of S^n.
    """

    kind: str
    direction: tuple
    param: float = 0.0

    def __post_init__(self):
        if self.kind not in ("slice", "hyperbolic", "funk"):
            raise ValueError(f"unknown coordinate kind {self.kind!r}")
        d = unit(self.direction, "direction")
        object.__setattr__(self, "direction", tuple(float(a) for a in d))
        object.__setattr__(self, "param", float(self.param))
        if self.kind == "slice":
            if self.param < MIN_SLICE_PSI:
                raise DegenerateSphere(f"slice radius psi must be positive, got {self.param:g}")
            if self.param > 0.5 * np.pi + 1e-15:
                raise ValueError("slice radius psi must not exceed pi/2")
        if self.kind == "hyperbolic" and abs(float(_mink(self.xi, self.xi)) + 1.0) > ON_MANIFOLD_TOL:
            raise ValueError("hyperbolic xi must satisfy [xi, xi] = -1")

    @classmethod
    def slice(cls, theta, psi: float) -> "GeodesicSphereCoord":
        return cls("slice", tuple(np.asarray(theta, dtype=float)), psi)

    @classmethod
    def hyperbolic(cls, sigma, rho: float) -> "GeodesicSphereCoord":
        return cls("hyperbolic", tuple(np.asarray(sigma, dtype=float)), rho)

    @classmethod
    def funk(cls, omega) -> "GeodesicSphereCoord":
        return cls("funk", tuple(np.asarray(omega, dtype=float)))

    @classmethod
    def from_xi(cls, xi) -> "GeodesicSphereCoord":
        """Hyperbolic coordinate from an ambient point of ``[xi, xi] = -1``."""
        xi = np.asarray(xi, dtype=float)
        if abs(float(_mink(xi, xi)) + 1.0) > ON_MANIFOLD_TOL:
            raise ValueError("xi must satisfy [xi, xi] = -1")
        return cls.hyperbolic(xi[:-1] / np.linalg.norm(xi[:-1]), math.asinh(xi[-1]))

    @property
    def vector(self) -> np.ndarray:
        return np.array(self.direction)

    @property
    def xi(self) -> np.ndarray:
        """The ambient point indexing the submanifold."""
        d = self.vector
        if self.kind == "slice":
            return np.append(d * math.sin(self.param), math.cos(self.param))
        if self.kind == "hyperbolic":
            return np.append(d * math.cosh(self.param), math.sinh(self.param))
        return d


# ---------------------------------------------------------------------------
# Functions on the curved spaces built from a harmonic profile
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ChartProfile:
    """A function on S^n or on the hyperboloid given by its transferred profile.

    ``g`` is the function on R^n to which the transform reduces:

    * ``"funk"``: ``f(theta) = |theta_{n+1}|^-n g(theta'/theta_{n+1})``, even,
      so that ``g(x) = (1 + |x|^2)^(-n/2) f(mu(x))``;
    * ``"slice"``: ``f(eta) = (1 - eta_{n+1})^(1-n) g(eta'/(1 - eta_{n+1}))``,
      so that ``g(x) = (2/(1 + |x|^2))^(n-1) f(nu(x))``;
    * ``"hyperbolic"``: ``f(x) = g(x~/x_{n+1}) / x_{n+1}^n``, with ``g``
      supported in the closed unit ball.
    """

    kind: str
    g: HarmonicProfile

    def __post_init__(self):
        if self.kind not in ("funk", "slice", "hyperbolic"):
            raise ValueError(f"unknown chart kind {self.kind!r}")
        if self.kind == "hyperbolic" and self.g.radial.support[1] > 1.0:
            raise ValueError("hyperbolic chart functions must vanish outside the unit ball")

    @property
    def n(self) -> int:
        return self.g.n

    @property
    def m(self) -> int:
        return self.g.m

    @property
    def chart_radii(self) -> tuple:
        """Radii in the chart where ``g`` is not smooth."""
        return _radii(self.g.radial)

    def __call__(self, pts) -> np.ndarray:
        pts = _points(pts, self.n + 1)
        last = pts[..., -1]
        out = np.zeros(last.shape)
        if self.kind == "funk":
            ok = last != 0
            z = last[ok]
            out[ok] = np.abs(z) ** -self.n * self.g(pts[ok][..., :-1] / z[..., None])
        elif self.kind == "slice":
            d = 1.0 - last
            ok = d > 0
            out[ok] = d[ok] ** (1 - self.n) * self.g(pts[ok][..., :-1] / d[ok][..., None])
        else:
            out = self.g(pts[..., :-1] / last[..., None]) / last**self.n
        return out


@dataclass(frozen=True)
class HyperbolicDualProfile:
    """``phi(xi) = v(tanh rho) Y_m(sigma) / ch^n rho`` on the one-sheeted hyperboloid.

    The values at ``tanh rho < 0`` follow from ``v(-t) = (-1)^m v(t)``; then
    ``phi`` is even.
    """

    n: int
    m: int
    v: RadialProfile
    axis: tuple = field(default=None)

    def __post_init__(self):
        axis = np.eye(self.n)[-1] if self.axis is None else unit(self.axis, "axis")
        object.__setattr__(self, "axis", tuple(float(a) for a in axis))

    def harmonic(self, sigma) -> np.ndarray:
        return HarmonicProfile(self.n, self.m, self.v, self.axis).harmonic(sigma)

    def __call__(self, xi) -> np.ndarray:
        xi = _points(xi, self.n + 1)
        t = xi[..., -1] / np.sqrt(1.0 + xi[..., -1] ** 2)
        sigma = unit(xi[..., :-1])
        vt = np.zeros(t.shape)
        nz = t != 0
        vt[nz] = self.v(np.abs(t[nz])) * np.sign(t[nz]) ** self.m
        return vt * self.harmonic(sigma) * (1.0 - t * t) ** (self.n / 2.0)


# ---------------------------------------------------------------------------
# Existence predicates (declared exponents)
# ---------------------------------------------------------------------------


def sphere_mean_existence(h: HarmonicProfile) -> Existence:
    """``int_{|x|<a} |f(x)|/|x| dx < inf``, i.e. ``sing0 > 1 - n``."""
    u = h.radial
    if u.is_zero or u.support[0] > 0 or u.sing0 > 1 - h.n:
        return Existence(True, "f |x|^-1 is integrable near the origin")
    return Existence(False, f"int_(|x|<a) |f|/|x| diverges: sing0 {u.sing0:g} <= {1 - h.n}")


def _chart_decay(p: ChartProfile, what: str) -> Existence:
    # both conditions become int_{|x|>a} |g(x)|/|x| dx < inf in the chart
    u = p.g.radial
    if u.is_zero or u.support[1] < INF or u.decay > p.n - 1:
        return Existence(True, f"{what} is finite")
    return Existence(False, f"{what} diverges: chart decay {u.decay:g} <= {p.n - 1}")


def funk_existence(p: ChartProfile) -> Existence:
    """``int_{|theta_{n+1}| < alpha} |f| < inf`` for the even function ``p``."""
    return _chart_decay(p, "the integral of |f| near the equator")


def slice_existence(p: ChartProfile) -> Existence:
    """``int_{eta_{n+1} > 1-eps} |f| (1 - eta_{n+1})^(-1/2) < inf``."""
    return _chart_decay(p, "the weighted integral of |f| near the north pole")


def hyperbolic_existence(p: ChartProfile) -> Existence:
    """``int_{d(x, e) > a} |f(x)| dx / x_{n+1} < inf``.

    The integral equals ``int_{tanh a < |y| < 1} |g|``; a chart profile is
    supported in the unit ball and locally integrable there, so the
    condition holds by construction.
    """
    if p.g.radial.support[1] <= 1.0:
        return Existence(True, "the chart function is supported in the unit ball")
    return Existence(False, "the chart function must vanish outside the unit ball")


def _require(ex: Existence):
    if not ex:
        raise DivergentIntegral(ex.reason)


# ---------------------------------------------------------------------------
# Spheres through the origin
# ---------------------------------------------------------------------------


def sphere_mean_forward(
    n: int,
    f,
    x,
    path: str = "direct",
    breaks=(),
    nodes: int = 32,
    cfg: QuadratureConfig | None = None,
) -> float:
    """``(Qf)(x) = int_{S^{n-1}} f(x + |x| theta) d*theta``.

    Parameters
    ----------
    n : int
        Dimension.
    f : callable or HarmonicProfile
        Function on R^n.  For a :class:`HarmonicProfile` the existence
        condition is checked first and ``breaks`` are read from it.
    x : array_like, shape (n,)
        Center of the sphere; must be nonzero.
    path : {"direct", "via_dual", "via_radon", "profile"}
        ``direct``: sphere rule on the sphere through the origin.
        ``via_dual``: ``|x|^(2-n) R* phi(x)`` with ``phi(theta, t) =
        (2|t|)^(n-2) f(2 t theta)``.
        ``via_radon``: ``|x|^(1-n) R psi(x/|x|, 1/|x|)`` with ``psi(y) =
        2^(n-1)/sigma_{n-1} |y|^(2-2n) f(2y/|y|^2)``.
        ``profile``: :func:`sphere_mean_profile` (harmonic profiles only).
    breaks : sequence of float
        Radii ``|y|`` where ``f`` is not smooth.
    """
    _check_path("sphere_mean", path)
    x = _points(x, n, "x")
    r = float(np.linalg.norm(x))
    if r == 0:
        raise OriginPoint("Qf is not defined at the origin")
    if isinstance(f, HarmonicProfile):
        _require(sphere_mean_existence(f))
        breaks = _radii(f.radial)
    elif path == "profile":
        raise TypeError("the profile path needs a HarmonicProfile")
    area = sphere_area(n)
    if path == "direct":
        cuts = [1.0 - b * b / (2.0 * r * r) for b in breaks]
        pts, wts = sphere_rule(n, nodes, -x / r, cuts)
        return float(np.asarray(f(x + r * pts), dtype=float) @ wts) / area
    if path == "via_dual":

        def phi(theta, t):
            return (2.0 * np.abs(t)) ** (n - 2) * f(2.0 * t[:, None] * theta)

        return r ** (2 - n) * dual_radon_brute_force(n, phi, x, [b / 2.0 for b in breaks], nodes)
    if path == "via_radon":
        c = 2.0 ** (n - 1) / area

        def psi(y):
            y = np.atleast_2d(y)
            s2 = np.sum(y * y, axis=-1)
            return c * s2 ** (1 - n) * f(2.0 * y / s2[:, None])

        coord = HyperplaneCoord(x / r, 1.0 / r)
        return r ** (1 - n) * radon_brute_force(n, psi, coord, [2.0 / b for b in breaks])
    w = sphere_mean_profile(f, cfg)
    return float(w(r) * f.harmonic(x / r))


def sphere_mean_transfer(h: HarmonicProfile) -> HarmonicProfile:
    """The function ``psi`` with ``Qf(x) = |x|^(1-n) R psi(x/|x|, 1/|x|)``."""
    n = h.n
    c = 2.0 ** (n - 1) / sphere_area(n)
    p = reciprocal(_dilate(h.radial, 2.0), 2.0 - 2.0 * n) * c
    return h.with_radial(p)


def sphere_mean_profile(h: HarmonicProfile, cfg: QuadratureConfig | None = None) -> RadialProfile:
    """``w`` with ``Q(u Y_m)(x) = w(|x|) Y_m(x/|x|)``, evaluated through ``R``."""
    _require(sphere_mean_existence(h))
    if h.radial.is_zero:
        return zero()
    v = radon_forward_profile(sphere_mean_transfer(h), cfg)
    return reciprocal(v, 1.0 - h.n)


def sphere_mean_invert_profile(n: int, m: int, w: RadialProfile, r: float, cfg: QuadratureConfig | None = None) -> float:
    """Recover ``u(r)`` from ``Q(u Y_m) = w Y_m``.

    ``u(r) = 2^(n-1) sigma_{n-1} r^(2-2n) U(2/r)`` where ``U`` is the inverse
    Radon profile of ``g(theta, t) = t^(1-n) w(1/t) Y_m(theta)``.
    """
    if not r > 0:
        raise OriginPoint("the radius must be positive")
    if w.is_zero:
        return 0.0
    v = reciprocal(w, 1.0 - n)
    big = radon_invert_profile(n, m, v, 2.0 / r, cfg)
    return 2.0 ** (n - 1) * sphere_area(n) * r ** (2 - 2 * n) * big


def sphere_mean_kernel_profile(n: int, m: int, coeffs, axis=None) -> HarmonicProfile:
    """``u(r) = sum_k c_k r^(k+2-n)``; its means over spheres through the origin vanish.

    ``coeffs`` are pairs ``(k, c_k)`` with ``0 <= k <= m-2`` and ``m - k``
    even.  The inversion ``y -> 2y/|y|^2`` carries ``u Y_m`` to a multiple of
    the Radon kernel profile ``sum_k c_k 2^(n-2-k) |y|^(-n-k) Y_m``.
    """
    psi = kernel_profile(n, m, coeffs, axis)
    u = zero()
    for k, c in coeffs:
        u = u + float(c) * power(k + 2 - n)
    return psi.with_radial(u)


# ---------------------------------------------------------------------------
# Funk transform
# ---------------------------------------------------------------------------


def _chart_input(f, kind: str, n: int, existence):
    if isinstance(f, ChartProfile):
        if f.kind != kind or f.n != n:
            raise ValueError(f"expected a {kind} chart profile in dimension {n}")
        _require(existence(f))
        return True
    return False


def funk_forward(
    n: int,
    f,
    omega,
    path: str = "direct",
    levels=(),
    nodes: int = 32,
    cfg: QuadratureConfig | None = None,
) -> float:
    """``(Ff)(omega)``: mean of the even function ``f`` over ``S^n cap omega^perp``.

    Parameters
    ----------
    f : callable or ChartProfile
        Even function on S^n, evaluated at arrays of points of shape (N, n+1).
    omega : array_like, shape (n+1,)
        Unit normal of the great subsphere.
    path : {"direct", "via_radon", "profile"}
        ``direct``: sphere rule on ``omega^perp`` (frame from the QR
        factorization of ``[omega | I]``), polar axis along the projection of
        ``e``.  ``via_radon``: ``2/(sigma_{n-1} sin d(omega, e)) Rg(eta, t)``
        with ``g(x) = (1+|x|^2)^(-n/2) f(mu(x))``, ``eta = -omega'/|omega'|``,
        ``t = omega_{n+1}/|omega'|`` after flipping to ``omega_{n+1} >= 0``.
    levels : sequence of float
        Values of ``|theta_{n+1}|`` across which ``f`` is not smooth (read from
        a :class:`ChartProfile`).
    """
    _check_path("funk", path)
    omega = unit(_points(omega, n + 1, "omega"), "omega")
    if _chart_input(f, "funk", n, funk_existence):
        levels = tuple(1.0 / math.sqrt(1.0 + b * b) for b in f.chart_radii)
    elif path == "profile":
        raise TypeError("the profile path needs a ChartProfile")
    if path == "direct":
        frame = complete_basis(omega)[:, 1:]
        a = frame.T @ _north(n)
        na = float(np.linalg.norm(a))
        axis, cuts = None, ()
        if na > 1e-12:
            axis = a / na
            cuts = tuple(s * c / na for c in levels for s in (1.0, -1.0))
            # the subsphere passes within |omega_{n+1}| of the poles, where
            # functions on S^n are often singular: grade panels toward s = +-1
            gap = omega[-1] ** 2 / (2.0 * na * na)
            cuts += tuple(s * (1.0 - gap * 4.0**j) for j in range(40) if gap * 4.0**j < 0.25 for s in (1.0, -1.0))
        pts, wts = sphere_rule(n, nodes, axis, cuts)
        return float(np.asarray(f(pts @ frame.T), dtype=float) @ wts) / sphere_area(n)
    w = omega if omega[-1] >= 0 else -omega
    sin_d = float(np.linalg.norm(w[:-1]))
    if sin_d < 1e-14:
        raise PoleCoordinate("the transfer to R is singular at omega = +-e_{n+1}")
    eta = -w[:-1] / sin_d
    t = float(w[-1]) / sin_d
    scale = 2.0 / (sphere_area(n) * sin_d)
    if path == "profile":
        return scale * float(radon_profile_forward(f.g, t, cfg) * f.g.harmonic(eta)) if t > 0 else scale * _profile_at_zero(f.g, eta, cfg)
    mu = ProjectiveMap("funk_mu", n)

    def g(x):
        x = np.atleast_2d(x)
        return (1.0 + np.sum(x * x, axis=-1)) ** (-n / 2.0) * f(mu.forward(x))

    breaks = [math.sqrt(1.0 / (c * c) - 1.0) for c in levels if 0.0 < c < 1.0]
    return scale * radon_brute_force(n, g, HyperplaneCoord(eta, t), breaks)


def _profile_at_zero(h: HarmonicProfile, theta, cfg) -> float:
    # hyperplanes through the origin: v(0) vanishes for odd m
    if h.m % 2:
        return 0.0
    return float(radon_profile_forward(h, 0.0, cfg) * h.harmonic(theta))


def funk_kernel_profile(n: int, m: int, coeffs, axis=None) -> ChartProfile:
    """Even ``f`` with ``f(eta sin psi + e cos psi) = Y_m(eta) sin^-n psi sum_k c_k cot^k psi``.

    ``0 <= k <= m-2`` and ``m - k`` even.  In the chart ``mu`` this is the
    Radon kernel profile ``sum_k c_k r^(-n-k) Y_m``, so ``Ff = 0`` away from
    the poles while ``f`` is not integrable there.
    """
    return ChartProfile("funk", kernel_profile(n, m, coeffs, axis))


# ---------------------------------------------------------------------------
# Spherical slice transform
# ---------------------------------------------------------------------------


def slice_forward(
    n: int,
    f,
    theta,
    psi: float,
    path: str = "direct",
    levels=(),
    nodes: int = 32,
    cfg: QuadratureConfig | None = None,
) -> float:
    """Integral of ``f`` over the sphere through ``e`` with center ``xi = theta sin psi + e cos psi``.

    The measure is the usual (unnormalized) surface element, so ``f = 1``
    gives the area ``sigma_{n-1} sin^(n-1) psi``.

    Parameters
    ----------
    f : callable or ChartProfile
        Function on S^n, evaluated at arrays of shape (N, n+1).
    theta : array_like, shape (n,)
        Unit vector; ``psi`` in ``(0, pi/2]``.
    path : {"direct", "via_radon", "profile"}
        ``direct``: ``sin^(n-1) psi int_{S^{n-1}} f(xi cos psi + zeta sin psi)``
        over unit ``zeta`` orthogonal to ``xi``, polar axis pointing to ``e``.
        ``via_radon``: ``Rg(theta, cot psi)`` with ``g(x) = (2/(|x|^2+1))^(n-1)
        f(nu(x))``.
    levels : sequence of float
        Values of ``eta_{n+1}`` across which ``f`` is not smooth.
    """
    _check_path("slice", path)
    coord = GeodesicSphereCoord.slice(_points(theta, n, "theta"), psi)
    theta, psi = coord.vector, coord.param
    if _chart_input(f, "slice", n, slice_existence):
        levels = tuple((b * b - 1.0) / (b * b + 1.0) for b in f.chart_radii)
    elif path == "profile":
        raise TypeError("the profile path needs a ChartProfile")
    sp, cp = math.sin(psi), math.cos(psi)
    t = cp / sp
    if path == "direct":
        xi = coord.xi
        frame = complete_basis(xi)[:, 1:]
        axis = frame.T @ ((_north(n) - xi * cp) / sp)
        cuts = tuple((c - cp * cp) / (sp * sp) for c in levels)
        pts, wts = sphere_rule(n, nodes, axis, cuts)
        eta = xi * cp + sp * (pts @ frame.T)
        return sp ** (n - 1) * float(np.asarray(f(eta), dtype=float) @ wts)
    if path == "profile":
        if t == 0:
            return _profile_at_zero(f.g, theta, cfg)
        return float(radon_profile_forward(f.g, t, cfg) * f.g.harmonic(theta))
    nu = ProjectiveMap("slice_nu", n)

    def g(x):
        x = np.atleast_2d(x)
        return (2.0 / (1.0 + np.sum(x * x, axis=-1))) ** (n - 1) * f(nu.forward(x))

    breaks = [math.sqrt((1.0 + c) / (1.0 - c)) for c in levels if -1.0 < c < 1.0]
    return radon_brute_force(n, g, HyperplaneCoord(theta, t), breaks)


def slice_zonal_forward(n: int, f0: RadialProfile, t, cfg: QuadratureConfig | None = None):
    """Slice transform of the zonal ``f(eta) = f0(cot(phi/2))``, ``phi`` the colatitude.

    Returns ``F0(t)`` with ``(Sf)(theta, psi) = F0(cot psi)``:
    ``F0(t) = 2^(n-1) sigma_{n-2} int_t^inf f0(r) (1+r^2)^(1-n) (r^2-t^2)^((n-3)/2) r dr``,
    the radial Radon transform of ``2^(n-1) f0(r) (1+r^2)^(1-n)``.
    """
    g = _weighted(f0, lambda r: 2.0 ** (n - 1) * (1.0 + r * r) ** (1 - n), 2.0 * n - 2.0)
    _require(slice_existence(ChartProfile("slice", HarmonicProfile(n, 0, g))))
    return radon_radial(n, g, t, cfg)


def slice_profile(p: ChartProfile, cfg: QuadratureConfig | None = None) -> RadialProfile:
    """``F`` with ``(Sf)(theta, psi) = F(cot psi) Y_m(theta)`` for a slice chart profile."""
    if p.kind != "slice":
        raise ValueError("expected a slice chart profile")
    _require(slice_existence(p))
    return radon_forward_profile(p.g, cfg)


def slice_invert_profile(n: int, m: int, data: RadialProfile, eta, axis=None, cfg: QuadratureConfig | None = None) -> float:
    """Recover ``f(eta)`` from slice data ``(Sf)(theta, psi) = F(cot psi) Y_m(theta)``.

    ``f(eta) = (1 - eta_{n+1})^(1-n) (R^-1 F)(nu^-1(eta))``, where ``R^-1 F``
    is the inverse Radon transform of ``F(t) Y_m(theta)``.
    """
    eta = unit(_points(eta, n + 1, "eta"), "eta")
    x = ProjectiveMap("slice_nu", n).inverse(eta)
    r = float(np.linalg.norm(x))
    if r == 0:
        raise PoleCoordinate("the south pole maps to the origin of the chart")
    if data.is_zero:
        return 0.0
    h = HarmonicProfile(n, m, data, axis)
    big = radon_invert_profile(n, m, data, r, cfg)
    return (1.0 - eta[-1]) ** (1 - n) * big * float(h.harmonic(x / r))


def slice_kernel_profile(n: int, m: int, coeffs, axis=None) -> ChartProfile:
    """``f`` with profile ``(1 - cos phi)^(1-n) sum_k c_k tan^(n+k)(phi/2)`` times ``Y_m``.

    Its slice transform vanishes although ``f != 0``.
    """
    return ChartProfile("slice", kernel_profile(n, m, coeffs, axis))


# ---------------------------------------------------------------------------
# Hyperbolic space
# ---------------------------------------------------------------------------


def hyperbolic_forward(
    n: int,
    f,
    xi: GeodesicSphereCoord,
    path: str = "direct",
    breaks=(),
    nodes: int = 32,
    cfg: QuadratureConfig | None = None,
) -> float:
    """Integral of ``f`` over the totally geodesic hypersurface ``[x, xi] = 0``.

    Parameters
    ----------
    f : callable or ChartProfile
        Function on the hyperboloid, evaluated at arrays of shape (N, n+1).
    xi : GeodesicSphereCoord
        ``(sigma, rho)`` with ``xi = sigma ch rho + e sh rho``.
    path : {"direct", "via_radon", "profile"}
        ``direct``: ``int_0^inf sh^(n-2) s ds int_{S^{n-2}} f(...)`` over the
        hypersurface through ``e_n sh rho + e ch rho`` after rotating ``e_n``
        to ``sigma``; the ``s`` integral stops at :data:`HYPERBOLIC_RMAX`.
        ``via_radon``: ``(1/ch rho) Rg(sigma, tanh rho)`` with ``g(y) =
        (1-|y|^2)^(-n/2) f(y/sqrt(1-|y|^2), 1/sqrt(1-|y|^2))``.
    breaks : sequence of float
        Radii ``|y| < 1`` in the gnomonic chart where ``f`` is not smooth.
    """
    _check_path("hyperbolic", path)
    if xi.kind != "hyperbolic" or len(xi.direction) != n:
        raise ValueError("xi must be a hyperbolic coordinate in dimension n")
    sigma, rho = xi.vector, xi.param
    if _chart_input(f, "hyperbolic", n, hyperbolic_existence):
        breaks = tuple(b for b in f.chart_radii if b < 1.0)
    elif path == "profile":
        raise TypeError("the profile path needs a ChartProfile")
    ch = math.cosh(rho)
    if path == "direct":
        frame = complete_basis(sigma)[:, 1:]
        pts, wts = sphere_rule(n - 1, nodes)
        om = pts @ frame.T
        shr = math.sinh(rho)
        s_breaks = []
        for b in breaks:
            q = b * b * ch * ch - shr * shr
            if 0.0 < q < 1.0:
                s_breaks.append(math.atanh(math.sqrt(q)))

        def layer(s):
            cs, ss = math.cosh(s), math.sinh(s)
            top = om * ss + sigma * (shr * cs)
            x = np.column_stack([top, np.full(len(om), ch * cs)])
            return ss ** (n - 2) * float(np.asarray(f(x), dtype=float) @ wts)

        bounds = sorted({0.0, *[s for s in s_breaks if s < HYPERBOLIC_RMAX]}) + [HYPERBOLIC_RMAX]
        return sum(_quad(layer, a, b) for a, b in zip(bounds[:-1], bounds[1:]))
    t = math.tanh(rho)
    if path == "profile":
        if t == 0:
            return _profile_at_zero(f.g, sigma, cfg) / ch
        return float(radon_profile_forward(f.g, t, cfg) * f.g.harmonic(sigma)) / ch
    gno = ProjectiveMap("hyperbolic_gnomonic", n)

    def g(y):
        y = np.atleast_2d(y)
        s2 = np.sum(y * y, axis=-1)
        out = np.zeros(s2.shape)
        inside = s2 < 1.0
        if np.any(inside):
            out[inside] = (1.0 - s2[inside]) ** (-n / 2.0) * f(gno.inverse(y[inside]))
        return out

    return radon_brute_force(n, g, HyperplaneCoord(sigma, t), (*breaks, 1.0)) / ch


def hyperbolic_dual(
    n: int,
    phi,
    x,
    path: str = "direct",
    nodes: int = 32,
    cfg: QuadratureConfig | None = None,
) -> float:
    """Mean of the even ``phi`` over the hypersurfaces ``[x, xi] = 0`` through ``x``.

    Parameters
    ----------
    phi : callable or HyperbolicDualProfile
        Even function on the one-sheeted hyperboloid ``[xi, xi] = -1``.
    x : array_like, shape (n+1,)
        Point of the hyperboloid, ``x = theta sh r + e ch r``.
    path : {"direct", "via_dual_radon", "profile"}
        ``direct``: ``int_{S^{n-1}} phi(eta' + theta eta_n ch r + e eta_n sh r) d*eta``
        in a frame with ``e_n -> theta``.  ``via_dual_radon``:
        ``(1/ch r) R*h(theta tanh r)`` with ``h(sigma, t) = (1-t^2)^(-n/2)
        phi(sigma/sqrt(1-t^2), t/sqrt(1-t^2))``.  ``profile``:
        ``(1/ch r) u(tanh r) Y_m(theta)`` with ``u`` from
        :func:`dual_radon_profile`.
    """
    _check_path("hyperbolic_dual", path)
    x = _points(x, n + 1, "x")
    ProjectiveMap._check_hyperboloid(x)
    top = x[:-1]
    sh = float(np.linalg.norm(top))
    r = math.asinh(sh)
    theta = top / sh if sh > 0 else np.eye(n)[-1]
    ch = math.cosh(r)
    if path == "direct":
        pts, wts = sphere_rule(n, nodes, theta)
        c = pts @ theta
        xi = np.column_stack([pts + np.outer((ch - 1.0) * c, theta), c * sh])
        return float(np.asarray(phi(xi), dtype=float) @ wts) / sphere_area(n)
    if path == "profile":
        if not isinstance(phi, HyperbolicDualProfile):
            raise TypeError("the profile path needs a HyperbolicDualProfile")
        if sh == 0:
            raise OriginPoint("the profile path needs x != e_{n+1}")
        u = dual_radon_profile(n, phi.m, phi.v, math.tanh(r), cfg)
        return float(u * phi.harmonic(theta)) / ch

    def h(sigma, t):
        out = np.zeros(np.shape(t))
        inside = np.abs(t) < 1.0
        if np.any(inside):
            q = np.sqrt(1.0 - t[inside] ** 2)
            xi = np.column_stack([sigma[inside] / q[:, None], t[inside] / q])
            out[inside] = q ** (-n) * phi(xi)
        return out

    return dual_radon_brute_force(n, h, theta * math.tanh(r), (), nodes) / ch


def hyperbolic_kernel_profile(n: int, m: int, coeffs, axis=None) -> ChartProfile:
    """``f(theta sh r + e ch r) = sh^-n r sum_k c_k coth^k r Y_m(theta)``.

    In the gnomonic chart this is the Radon kernel profile ``sum_k c_k
    |y|^(-n-k) Y_m`` cut off at ``|y| = 1``.  The cut-off part is not in the
    kernel of ``R``, so the totally geodesic transform of ``f`` does not
    vanish; see :func:`measure_transfer_check` and the tests for the values.
    """
    h = kernel_profile(n, m, coeffs, axis)
    return ChartProfile("hyperbolic", h.with_radial(_truncate(h.radial, 1.0)))


# ---------------------------------------------------------------------------
# Change-of-variables identities
# ---------------------------------------------------------------------------

MEASURE_IDENTITIES = ("teq1", "teq2", "hvar", "stslice", "stslice1", "hvaRFr", "iKOOUY", "duas3")


def _default_test(which: str, n: int):
    c = np.linspace(0.3, 0.7, n + 1)
    if which == "teq1":
        return lambda th: np.exp(th @ c[:n])
    if which in ("hvar", "hvaRFr"):
        return lambda th: np.exp(-((th @ c[: th.shape[-1]]) ** 2)) + th[..., -1] ** 2
    if which == "teq2":
        return lambda x: np.exp(-np.sum(x * x, axis=-1) + 0.3 * x[..., 0])
    if which == "stslice":
        return lambda eta: np.exp(eta @ c)
    if which == "stslice1":
        return lambda x: np.exp(-np.sum(x * x, axis=-1)) * (1.0 + 0.5 * x[..., 0])
    if which == "iKOOUY":
        return lambda x: np.exp(-x[..., -1]) * (1.0 + 0.3 * x[..., 0] / x[..., -1])
    raise ValueError(f"unknown identity {which!r}")


def measure_transfer_check(which: str, n: int, f=None, a: float = 0.5, nodes: int = 32) -> Comparison:
    """Both sides of a change-of-variables identity, each by its own quadrature.

    Parameters
    ----------
    which : str
        ``"teq1"``: ``int_{S^{n-1}} f = int_{R^{n-1}} [f((x+e)/|x+e|) +
        f((x-e)/|x-e|)] (|x|^2+1)^(-n/2) dx``.
        ``"hvar"``: the even case, ``2 int f((x+e)/|x+e|) (|x|^2+1)^(-n/2)``.
        ``"teq2"``: ``int_{R^{n-1}} f = int_{S^{n-1}_+} f(theta'/theta_n) theta_n^-n``.
        ``"stslice"``: ``int_{S^n} f = 2^n int_{R^n} f(nu(x)) (|x|^2+1)^-n dx``.
        ``"stslice1"``: ``int_{R^n} g = int_{S^n} g(nu^-1 eta) (1-eta_{n+1})^-n``.
        ``"hvaRFr"``: ``int_{|x|>a} f(mu(x)) (1+|x|^2)^(-(n+1)/2) dx =
        1/2 int_{|theta_{n+1}| < alpha} f``, ``alpha = (1+a^2)^(-1/2)``, ``f`` even.
        ``"iKOOUY"``: ``int_{d(x,e) > a} f dx/x_{n+1} = int_{tanh a < |y| < 1} g``.
        ``"duas3"``: the Radon duality ``int_{Z_n} Rf/(1+t^2)^(n/2) =
        int f/(1+|x|^2)^(1/2)`` for ``f`` a :class:`HarmonicProfile`.
    n : int
        Dimension of the sphere ``S^{n-1}`` (``teq1``, ``hvar``, ``teq2``), of
        R^n (``stslice``, ``stslice1``, ``hvaRFr`` with S^n) or of the
        hyperbolic space.
    f : callable, optional
        Test function; a fixed smooth one is used by default.
    a : float
        Radius for ``hvaRFr`` and hyperbolic distance for ``iKOOUY``.
    """
    if which == "duas3":
        h = f if f is not None else HarmonicProfile(n, 0, gaussian())
        return duality_pairing_check(h)
    f = _default_test(which, n) if f is None else f
    e = _north(n - 1) if which in ("teq1", "hvar", "teq2") else _north(n)
    if which in ("teq1", "hvar"):
        pts, wts = sphere_rule(n, nodes)
        lhs = float(np.asarray(f(pts), dtype=float) @ wts)

        def lifted(x, sign):
            q = np.column_stack([x, np.full(len(x), sign)])
            return f(q / np.linalg.norm(q, axis=-1, keepdims=True))

        def right(x):
            w = (1.0 + np.sum(x * x, axis=-1)) ** (-n / 2.0)
            if which == "hvar":
                return 2.0 * w * lifted(x, 1.0)
            return w * (lifted(x, 1.0) + lifted(x, -1.0))

        return Comparison(lhs, _ball_integral(n - 1, right, nodes=nodes))
    if which == "teq2":
        lhs = _ball_integral(n - 1, f, nodes=nodes)
        pts, wts = sphere_rule(n, nodes, e, (0.1, 0.2, 0.3))
        up = pts[:, -1] > 0
        z = pts[up, -1]
        vals = np.asarray(f(pts[up, :-1] / z[:, None]), dtype=float) / z**n
        return Comparison(lhs, float(vals @ wts[up]))
    if which == "stslice":
        pts, wts = sphere_rule(n + 1, nodes)
        lhs = float(np.asarray(f(pts), dtype=float) @ wts)
        nu = ProjectiveMap("slice_nu", n)

        def right(x):
            return 2.0**n * f(nu.forward(x)) / (1.0 + np.sum(x * x, axis=-1)) ** n

        return Comparison(lhs, _ball_integral(n, right, nodes=nodes))
    if which == "stslice1":
        lhs = _ball_integral(n, f, nodes=nodes)
        pts, wts = sphere_rule(n + 1, nodes, e)
        ok = pts[:, -1] < 1.0
        d = 1.0 - pts[ok, -1]
        vals = np.asarray(f(pts[ok, :-1] / d[:, None]), dtype=float) / d**n
        return Comparison(lhs, float(vals @ wts[ok]))
    if which == "hvaRFr":
        alpha = 1.0 / math.sqrt(1.0 + a * a)
        mu = ProjectiveMap("funk_mu", n)

        def left(x):
            return f(mu.forward(x)) / (1.0 + np.sum(x * x, axis=-1)) ** ((n + 1) / 2.0)

        lhs = _ball_integral(n, left, lo=a, nodes=nodes)
        pts, wts = sphere_rule(n + 1, nodes, e, (alpha, -alpha))
        band = np.abs(pts[:, -1]) < alpha
        return Comparison(lhs, 0.5 * float(np.asarray(f(pts[band]), dtype=float) @ wts[band]))
    if which == "iKOOUY":
        pts, wts = sphere_rule(n, nodes)

        def shell(r):
            x = hyperbolic_point(pts, np.full(len(pts), r))
            return math.sinh(r) ** (n - 1) / math.cosh(r) * float(np.asarray(f(x), dtype=float) @ wts)

        lhs = _quad(shell, a, HYPERBOLIC_RMAX)
        gno = ProjectiveMap("hyperbolic_gnomonic", n)

        def g(y):
            s2 = np.sum(y * y, axis=-1)
            return (1.0 - s2) ** (-n / 2.0) * f(gno.inverse(y))

        return Comparison(lhs, _ball_integral(n, g, lo=math.tanh(a), hi=1.0, nodes=nodes))
    raise ValueError(f"unknown identity {which!r}; expected one of {MEASURE_IDENTITIES}")


# ---------------------------------------------------------------------------
# Support scans
# ---------------------------------------------------------------------------


def support_scan_projective(which: str, n: int, f, a: float, count: int = 20, nodes: int = 32) -> float:
    """Largest ``|transform|`` over ``count`` coordinates where it must vanish.

    ``f`` must vanish on the region named by the support theorem:

    * ``"funk"``: ``|theta_{n+1}| < a``; scanned ``omega`` have
      ``|omega_{n+1}| > sqrt(1 - a^2)``.
    * ``"slice"``: ``eta_{n+1} > a``; scanned centers have ``xi_{n+1} >
      sqrt((1 + a)/2)``.
    * ``"sphere_mean"``: ``|x| < 2a``; scanned ``x`` have ``|x| < a``.
    * ``"hyperbolic"``: ``d(x, e) > a``; scanned ``xi`` have ``|rho| > a``.

    All values use the direct path.
    """
    dirs = _directions(n, count)
    frac = (np.arange(count) + 1.0) / (count + 1.0)
    vals = []
    if which == "funk":
        lo = math.sqrt(1.0 - a * a)
        for d, q in zip(dirs, frac):
            z = lo + (1.0 - lo) * q
            vals.append(funk_forward(n, f, np.append(d * math.sqrt(1.0 - z * z), z), nodes=nodes))
    elif which == "slice":
        top = math.acos(math.sqrt((1.0 + a) / 2.0))
        for d, q in zip(dirs, frac):
            vals.append(slice_forward(n, f, d, top * q, nodes=nodes))
    elif which == "sphere_mean":
        for d, q in zip(dirs, frac):
            vals.append(sphere_mean_forward(n, f, d * a * q, nodes=nodes))
    elif which == "hyperbolic":
        for i, (d, q) in enumerate(zip(dirs, frac)):
            rho = a * (1.0 + 2.0 * q) * (-1.0 if i % 2 else 1.0)
            vals.append(hyperbolic_forward(n, f, GeodesicSphereCoord.hyperbolic(d, rho), nodes=nodes))
    else:
        raise ValueError(f"unknown transform {which!r}")
    return float(np.max(np.abs(vals)))
