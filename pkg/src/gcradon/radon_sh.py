"""Hyperplane Radon transform of functions ``u(|x|) Y_m(x/|x|)`` on R^n.

For such a function ``Rf(theta, t) = v(t) Y_m(theta)`` and ``R* (v Y_m) =
u Y_m``, with ``lam = (n-2)/2``::

    v(t) = pi^(lam+1/2) G^{lam,m}_- u(|t|) * sign(t)^m
    u(r) = Gamma(n/2)/sqrt(pi) G^{lam,m}_+ v(r)
    u(t) = 2^(1-n) pi^((1-n)/2) (-d/dt)^(n-1) *G^{lam,m}_- v(t)

(``T^m_-`` and ``T^m_+`` when ``n = 2``).  Brute-force oracles integrate
directly over hyperplanes (``n`` in {2, 3}) and over the sphere of
directions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy import integrate

from .compare import Comparison
from .errors import DivergentIntegral, InvalidKernelIndex
from .fracint import FracParams, _as_t, frac_integral, onesided_integral
from .gegchev import GCOperator, gc_apply, gc_apply_profile, gc_existence, starred_derivative
from .profiles import INF, RadialProfile, power, zero
from .quadrature import DEFAULT_CONFIG, QuadratureConfig
from .specfun import kernel_constant, kernel_poly, sphere_area, zonal_harmonic
from .sphere import complete_basis, fibonacci_sphere, sphere_rule, unit

__all__ = [
    "HarmonicProfile",
    "HyperplaneCoord",
    "SinogramGrid",
    "conjugation_check",
    "dual_radon_brute_force",
    "dual_radon_profile",
    "duality_pairing_check",
    "half_line_moment",
    "kernel_profile",
    "radon_brute_force",
    "radon_forward_profile",
    "radon_invert_profile",
    "radon_profile_forward",
    "radon_radial",
    "support_scan",
]

# relative tolerance for the QUADPACK oracles
ORACLE_RTOL = 1e-11


@dataclass(frozen=True)
class HarmonicProfile:
    """The function ``f(x) = u(|x|) Y_m(x/|x|)`` on R^n.

    Parameters
    ----------
    n : int
        Ambient dimension, ``n >= 2``.
    m : int
        Harmonic degree.
    radial : RadialProfile
        The radial factor ``u``.
    axis : tuple of float, optional
        Axis of the zonal harmonic ``Y_m``; defaults to ``e_n``.
    """

    n: int
    m: int
    radial: RadialProfile
    axis: tuple = field(default=None)

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 2:
            raise ValueError(f"dimension n must be an integer >= 2, got {self.n}")
        if int(self.m) != self.m or self.m < 0:
            raise ValueError(f"degree m must be a nonnegative integer, got {self.m}")
        axis = np.eye(self.n)[-1] if self.axis is None else unit(self.axis, "axis")
        if axis.shape != (self.n,):
            raise ValueError("axis must live in R^n")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "m", int(self.m))
        object.__setattr__(self, "axis", tuple(float(a) for a in axis))

    @property
    def lam(self) -> float:
        return (self.n - 2) / 2.0

    @property
    def operator(self) -> GCOperator:
        """The right-sided operator ``G^{lam,m}_-`` acting on the radial factor."""
        return GCOperator(self.lam, self.m, "minus")

    def harmonic(self, theta) -> np.ndarray:
        """``Y_m`` at unit vectors ``theta``."""
        return zonal_harmonic(self.n, self.m, np.array(self.axis), theta)

    def __call__(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        r = np.linalg.norm(x, axis=-1)
        out = np.zeros(r.shape)
        pos = r > 0
        if np.any(pos):
            theta = x[pos] / r[pos][..., None]
            out[pos] = self.radial(r[pos]) * self.harmonic(theta)
        return out

    def with_radial(self, radial: RadialProfile) -> "HarmonicProfile":
        return HarmonicProfile(self.n, self.m, radial, self.axis)


@dataclass(frozen=True)
class HyperplaneCoord:
    """The hyperplane ``{x : x . theta = t}`` in canonical form.

    ``(theta, t)`` and ``(-theta, -t)`` name the same hyperplane; the stored
    pair has ``t > 0``, or ``t = 0`` and the first nonzero component of
    ``theta`` positive.
    """

    theta: tuple
    t: float

    def __post_init__(self):
        theta = unit(self.theta, "theta")
        t = float(self.t)
        nz = theta[np.nonzero(np.abs(theta) > 1e-15)[0][0]]
        if t < 0 or (t == 0 and nz < 0):
            theta, t = -theta, -t
        object.__setattr__(self, "theta", tuple(float(a) for a in theta))
        object.__setattr__(self, "t", t + 0.0)

    @property
    def vector(self) -> np.ndarray:
        return np.array(self.theta)


def half_line_moment(f: RadialProfile, p: float, cfg: QuadratureConfig | None = None) -> float:
    """``int_0^inf f(r) r^p dr`` split at ``r = 1`` into two unit-interval integrals."""
    cfg = cfg or DEFAULT_CONFIG
    if f.is_zero:
        return 0.0
    if not (f.support[0] > 0 or f.sing0 + p > -1):
        raise DivergentIntegral(f"int_0 f(r) r^{p:g} dr diverges")
    if not (f.support[1] < INF or f.decay - p > 1):
        raise DivergentIntegral(f"int^inf f(r) r^{p:g} dr diverges")
    inner = onesided_integral(f, 1.0, "plus", None, p, 0.0, cfg)
    outer = onesided_integral(f, 1.0, "minus", None, -p - 2.0, 0.0, cfg)
    return float(inner.value + outer.value)


def _radon_existence(h: HarmonicProfile):
    u = h.radial
    ok = u.is_zero or u.support[1] < INF or u.decay > 2 * h.lam + 1
    if not ok:
        raise DivergentIntegral(
            f"int_a^inf |u(r)| r^{2 * h.lam:g} dr < inf fails: decay {u.decay:g} <= {2 * h.lam + 1:g}"
        )
    return gc_existence(h.operator, u)


def radon_profile_forward(h: HarmonicProfile, t, cfg: QuadratureConfig | None = None):
    """The factor ``v`` in ``Rf(theta, t) = v(t) Y_m(theta)``.

    Parameters
    ----------
    h : HarmonicProfile
    t : float or array_like
        Any real signed distances; ``v(-t) = (-1)^m v(t)``.

    Raises
    ------
    DivergentIntegral
        If ``int_a^inf |u(r)| r^(2lam) dr`` diverges.
    """
    cfg = cfg or DEFAULT_CONFIG
    _radon_existence(h)
    t = np.asarray(t, dtype=float)
    out = np.zeros(t.shape)
    at = np.abs(t)
    pos = at > 0
    pref = math.pi ** (h.lam + 0.5)
    if np.any(pos):
        vals = pref * np.asarray(gc_apply(h.operator, h.radial, at[pos], cfg))
        if h.m % 2:
            vals = vals * np.sign(t[pos])
        out[pos] = vals
    if np.any(~pos) and h.m % 2 == 0:
        # G_- u(0) = K_m(0)/c int_0^inf r^(2lam) u(r) dr
        k0 = float(kernel_poly(h.lam, h.m, 0.0))
        if k0 != 0.0:
            out[~pos] = pref * k0 / kernel_constant(h.lam, h.m) * half_line_moment(h.radial, 2 * h.lam, cfg)
    return float(out) if out.ndim == 0 else out


def radon_forward_profile(h: HarmonicProfile, cfg: QuadratureConfig | None = None) -> RadialProfile:
    """``v`` on ``t > 0`` as a lazily evaluated profile (for nesting in other integrals)."""
    _radon_existence(h)
    return math.pi ** (h.lam + 0.5) * gc_apply_profile(h.operator, h.radial, cfg)


def radon_radial(n: int, f0: RadialProfile, t, cfg: QuadratureConfig | None = None):
    """``F0(t) = sigma_{n-2} int_|t|^inf f0(r) (r^2-t^2)^((n-3)/2) r dr``.

    The Radon transform of the radial function ``f0(|x|)``, computed as
    ``sigma_{n-2} Gamma((n-1)/2)/2 I^{(n-1)/2}_{-,2} f0``.
    """
    cfg = cfg or DEFAULT_CONFIG
    if n < 2:
        raise ValueError("n must be at least 2")
    t = np.asarray(t, dtype=float)
    if f0.is_zero:
        return 0.0 if t.ndim == 0 else np.zeros(t.shape)
    if not (f0.support[1] < INF or f0.decay > n - 1):
        raise DivergentIntegral(f"int^inf |f0(r)| r^{n - 2} dr diverges: decay {f0.decay:g} <= {n - 1}")
    a = 0.5 * (n - 1)
    const = sphere_area(n - 1) * math.gamma(a) / 2.0
    out = np.zeros(t.shape)
    at = np.abs(t)
    pos = at > 0
    if np.any(pos):
        out[pos] = const * np.asarray(frac_integral(FracParams(a, "minus", "erdelyi_kober"), f0, at[pos], cfg))
    if np.any(~pos):
        out[~pos] = sphere_area(n - 1) * half_line_moment(f0, n - 2.0, cfg)
    return float(out) if out.ndim == 0 else out


def _quad(func, a, b):
    val, _ = integrate.quad(func, a, b, epsabs=0.0, epsrel=ORACLE_RTOL, limit=400)
    return val


def _radial_pieces(func, edges):
    # integrate func over [0, inf) split at the given finite edges
    pts = sorted({0.0, *[e for e in edges if e > 0]})
    total = sum(_quad(func, a, b) for a, b in zip(pts[:-1], pts[1:]))
    return total + _quad(func, pts[-1], np.inf)


def radon_brute_force(
    n: int,
    f: Callable[[np.ndarray], np.ndarray],
    coord: HyperplaneCoord,
    breaks=(),
    azimuths: int = 64,
) -> float:
    """``int_{theta-perp} f(t theta + y) dy`` by direct quadrature.

    ``n = 2``: adaptive QUADPACK along the line.  ``n = 3``: adaptive QUADPACK
    in the in-plane radius times an ``azimuths``-point trapezoid in angle.
    ``breaks`` are radii ``|x|`` where ``f`` is not smooth.
    """
    if n not in (2, 3):
        raise ValueError("brute-force hyperplane integrals are provided for n = 2 and 3")
    theta = coord.vector
    if theta.size != n:
        raise ValueError("hyperplane normal must live in R^n")
    basis = complete_basis(theta)[:, 1:]
    t = coord.t
    edges = [math.sqrt(b * b - t * t) for b in breaks if b > abs(t)]
    base = t * theta
    if n == 2:
        e = basis[:, 0]

        def line(s):
            return float(f((base + s * e)[None, :])[0] + f((base - s * e)[None, :])[0])

        return _radial_pieces(line, edges)
    phi = 2.0 * np.pi * np.arange(azimuths) / azimuths
    dirs = np.cos(phi)[:, None] * basis[:, 0] + np.sin(phi)[:, None] * basis[:, 1]

    def ring(rho):
        return rho * float(np.mean(f(base + rho * dirs))) * 2.0 * np.pi

    return _radial_pieces(ring, edges)


def dual_radon_profile(n: int, m: int, v: RadialProfile, r, cfg: QuadratureConfig | None = None):
    """The factor ``u`` in ``R*(v Y_m)(r theta) = u(r) Y_m(theta)``.

    ``v`` gives the values for ``t > 0``; the values at ``t < 0`` are fixed
    by the parity ``v(-t) = (-1)^m v(t)``.
    """
    if not (v.is_zero or v.support[0] > 0 or v.sing0 > -1):
        raise DivergentIntegral(f"v is not locally integrable at 0: sing0 {v.sing0:g} <= -1")
    lam = (n - 2) / 2.0
    r = _as_t(r)
    if v.is_zero:
        return 0.0 if r.ndim == 0 else np.zeros(r.shape)
    val = math.gamma(n / 2.0) / math.sqrt(math.pi) * np.asarray(gc_apply(GCOperator(lam, m, "plus"), v, r, cfg))
    return float(val) if val.ndim == 0 else val


def dual_radon_brute_force(
    n: int,
    phi: Callable[[np.ndarray, np.ndarray], np.ndarray],
    x,
    t_breaks=(),
    nodes: int = 24,
) -> float:
    """``int_{S^{n-1}} phi(theta, x . theta) d*theta`` (normalized measure).

    The sphere rule is aligned with ``x``; ``t_breaks`` are values of
    ``x . theta`` across which ``phi`` is not smooth.
    """
    x = np.asarray(x, dtype=float)
    if x.shape != (n,):
        raise ValueError("x must live in R^n")
    norm = float(np.linalg.norm(x))
    axis = x / norm if norm > 0 else None
    cuts = [b / norm for b in t_breaks] if norm > 0 else []
    cuts += [-c for c in cuts]
    pts, wts = sphere_rule(n, nodes, axis, cuts)
    vals = np.asarray(phi(pts, pts @ x), dtype=float)
    return float(vals @ wts) / sphere_area(n)


def radon_invert_profile(n: int, m: int, v: RadialProfile, t: float, cfg: QuadratureConfig | None = None) -> float:
    """Recover ``u(t)`` from ``v = radon_profile_forward`` for every ``n >= 2``.

    ``u(t) = 2^(1-n) pi^((1-n)/2) (-d/dt)^(n-1) *G^{lam,m}_- v(t)``; the
    integer-order derivative is taken from a local Chebyshev interpolant.
    """
    cfg = cfg or DEFAULT_CONFIG
    if n < 2:
        raise ValueError("n must be at least 2")
    if not t > 0:
        _as_t(t)
    if v.is_zero:
        return 0.0
    op = GCOperator((n - 2) / 2.0, m, "minus")
    ex = gc_existence(op.star(), v)
    if not ex:
        raise DivergentIntegral(ex.reason)
    return 2.0 ** (1 - n) * math.pi ** ((1 - n) / 2.0) * starred_derivative(op, v, float(t), cfg)


def kernel_profile(n: int, m: int, coeffs, axis=None) -> HarmonicProfile:
    """``u(r) = sum_k c_k r^(-n-k)``, a nonzero function with vanishing Radon transform.

    Parameters
    ----------
    coeffs : sequence of (k, c_k)
        ``0 <= k <= m-2`` and ``m - k`` even.
    """
    if m < 2:
        raise InvalidKernelIndex("kernel profiles need m >= 2")
    u = zero()
    for k, c in coeffs:
        if int(k) != k or not (0 <= k <= m - 2) or (m - k) % 2:
            raise InvalidKernelIndex(f"need 0 <= k <= m-2 and m-k even; got m={m}, k={k}")
        u = u + float(c) * power(-n - int(k))
    if u.is_zero:
        raise InvalidKernelIndex("kernel profile needs at least one nonzero coefficient")
    return HarmonicProfile(n, m, u, axis)


def support_scan(h: HarmonicProfile, a: float, ts=None, cfg: QuadratureConfig | None = None) -> float:
    """``max |v(t)|`` over ``t`` in ``(a, 3a]`` (20 points by default)."""
    if ts is None:
        ts = np.linspace(a, 3 * a, 21)[1:]
    return float(np.max(np.abs(radon_profile_forward(h, np.asarray(ts, dtype=float), cfg))))


def _mean_harmonic(h: HarmonicProfile, nodes: int = 16) -> float:
    pts, wts = sphere_rule(h.n, nodes, np.array(h.axis))
    return float(h.harmonic(pts) @ wts) / sphere_area(h.n)


def duality_pairing_check(h: HarmonicProfile, cfg: QuadratureConfig | None = None) -> Comparison:
    """Both sides of ``int_{Z_n} Rf / (1+t^2)^(n/2) = int_{R^n} f / (1+|x|^2)^(1/2)``.

    The left side integrates ``v(t)/(1+t^2)^(n/2)`` over the real line with
    QUADPACK; the right side integrates ``u(r) r^(n-1)/(1+r^2)^(1/2)``.  The
    angular factors are sphere-rule averages of ``Y_m``.
    """
    n, u = h.n, h.radial
    if u.is_zero:
        return Comparison(0.0, 0.0)
    if not (u.support[1] < INF or u.decay > n - 1):
        raise DivergentIntegral("int f(x) (1+|x|^2)^(-1/2) dx diverges")
    mean_y = _mean_harmonic(h)
    area = sphere_area(n)
    edges = [b for b in (*u.breaks, *u.support) if 0 < b < INF]

    def left(t):
        return radon_profile_forward(h, t, cfg) / (1.0 + t * t) ** (n / 2.0)

    lhs = mean_y * (_radial_pieces(left, edges) + _radial_pieces(lambda t: left(-t), edges))

    def right(r):
        return float(u(np.array([r]))[0]) * r ** (n - 1) / math.sqrt(1.0 + r * r)

    rhs = area * mean_y * _radial_pieces(right, edges)
    return Comparison(lhs, rhs)


def conjugation_check(direction: str, n: int, test, points, breaks=(), nodes: int = 48) -> Comparison:
    """Both sides of the reflection identities linking ``R`` and ``R*``.

    ``direction="dual_from_forward"``: ``test`` is an even ``phi(theta, t)``
    and ``points`` are nonzero ``x``;
    ``R* phi(x) = 2/(|x| sigma_{n-1}) (R A phi)(x/|x|, 1/|x|)`` with
    ``A phi(y) = |y|^-n phi(y/|y|, 1/|y|)``.

    ``direction="forward_from_dual"``: ``test`` is ``f`` on R^n and
    ``points`` are :class:`HyperplaneCoord` with ``t != 0``;
    ``Rf(theta, t) = sigma_{n-1}/(2|t|) R*(B f)(theta/t)`` with
    ``B f(theta, s) = |s|^-n f(theta/s)``.

    Every value is a brute-force quadrature.  ``breaks`` are the radii
    ``|x|`` (``forward_from_dual``) or the values ``|t|`` (``dual_from_forward``)
    where the test function is not smooth; for a :class:`HarmonicProfile`
    they are read from its radial factor.
    """
    area = sphere_area(n)
    if isinstance(test, HarmonicProfile):
        u = test.radial
        breaks = tuple(b for b in (*u.breaks, *u.support) if 0 < b < INF)
    inv = tuple(1.0 / b for b in breaks if b > 0)
    lhs, rhs = [], []
    if direction == "dual_from_forward":
        phi = test

        def a_phi(y):
            y = np.atleast_2d(y)
            r = np.linalg.norm(y, axis=-1)
            return r**-n * phi(y / r[:, None], 1.0 / r)

        for x in points:
            x = np.asarray(x, dtype=float)
            rx = float(np.linalg.norm(x))
            lhs.append(dual_radon_brute_force(n, phi, x, breaks, nodes))
            rhs.append(2.0 / (rx * area) * radon_brute_force(n, a_phi, HyperplaneCoord(x / rx, 1.0 / rx), inv))
    elif direction == "forward_from_dual":
        f = test

        def b_f(theta, s):
            s = np.asarray(s, dtype=float)
            out = np.zeros(s.shape)
            nz = s != 0
            out[nz] = np.abs(s[nz]) ** -n * f(theta[nz] / s[nz, None])
            return out

        for c in points:
            lhs.append(radon_brute_force(n, f, c, breaks))
            rhs.append(area / (2.0 * abs(c.t)) * dual_radon_brute_force(n, b_f, c.vector / c.t, inv, nodes))
    else:
        raise ValueError("direction must be 'dual_from_forward' or 'forward_from_dual'")
    return Comparison(np.array(lhs), np.array(rhs))


@dataclass(frozen=True)
class SinogramGrid:
    """Samples of ``Rf`` on directions x signed distances.

    ``values[i, j] = Rf(thetas[i], ts[j])``; ``mask`` flags entries that could
    not be evaluated.
    """

    n: int
    thetas: np.ndarray = field(repr=False)
    ts: np.ndarray = field(repr=False)
    values: np.ndarray = field(repr=False)
    mask: np.ndarray = field(repr=False)

    @classmethod
    def from_profile(
        cls,
        h: HarmonicProfile,
        n_theta: int | None = None,
        n_t: int = 41,
        t_max: float = 3.0,
        cfg: QuadratureConfig | None = None,
    ) -> "SinogramGrid":
        """Sample ``v(t) Y_m(theta)``.

        Directions are equispaced angles for ``n = 2`` and a Fibonacci lattice
        (256 points by default) for ``n = 3``.
        """
        if h.n == 2:
            k = n_theta or 64
            ang = 2.0 * np.pi * np.arange(k) / k
            thetas = np.column_stack([np.cos(ang), np.sin(ang)])
        elif h.n == 3:
            thetas = fibonacci_sphere(n_theta or 256)
        else:
            raise ValueError("sinogram grids are provided for n = 2 and 3")
        ts = np.linspace(-t_max, t_max, n_t)
        with np.errstate(all="ignore"):
            v = np.asarray(radon_profile_forward(h, ts, cfg), dtype=float)
        values = np.outer(h.harmonic(thetas), v)
        mask = ~np.isfinite(values)
        return cls(h.n, thetas, ts, np.where(mask, 0.0, values), mask)

    def evenness_defect(self) -> float:
        """``max |Rf(theta, t) - Rf(-theta, -t)|`` over pairs present in the grid."""
        worst = 0.0
        flip = self.ts[::-1]
        if not np.allclose(flip, -self.ts, atol=1e-12):
            return worst
        for i, th in enumerate(self.thetas):
            d = np.linalg.norm(self.thetas + th, axis=1)
            j = int(np.argmin(d))
            if d[j] > 1e-9:
                continue
            ok = ~(self.mask[i] | self.mask[j][::-1])
            diff = np.abs(self.values[i] - self.values[j][::-1])[ok]
            if diff.size:
                worst = max(worst, float(diff.max()))
        return worst
