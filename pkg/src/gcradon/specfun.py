"""Gegenbauer and Chebyshev polynomials, sphere constants and Mellin closed forms.

All polynomial evaluators broadcast over array arguments.  ``lam == 0`` is the
Chebyshev branch throughout: wherever a Gegenbauer formula carries the
constant ``c_{lam,m}`` the Chebyshev analogue uses ``sqrt(pi)/2`` instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import special

__all__ = [
    "PolyParams",
    "chebyshev",
    "funk_hecke_kernel",
    "gegenbauer",
    "kernel_constant",
    "kernel_poly",
    "kernel_poly_reversed",
    "mellin_alpha",
    "mellin_beta",
    "normalizing_constant",
    "sh_dimension",
    "sphere_area",
    "zonal_harmonic",
    "zonal_norm",
]


@dataclass(frozen=True)
class PolyParams:
    """Gegenbauer index and degree.

    Parameters
    ----------
    lam : float
        Gegenbauer index, ``lam > -1/2``.  ``lam == 0`` selects Chebyshev.
    m : int
        Degree, ``m >= 0``.
    """

    lam: float
    m: int

    def __post_init__(self):
        if not self.lam > -0.5:
            raise ValueError(f"Gegenbauer index must exceed -1/2, got {self.lam}")
        if int(self.m) != self.m or self.m < 0:
            raise ValueError(f"degree must be a nonnegative integer, got {self.m}")
        object.__setattr__(self, "m", int(self.m))

    @property
    def eta(self) -> int:
        """Parity of the degree, 0 for even and 1 for odd."""
        return self.m % 2

    @property
    def is_chebyshev(self) -> bool:
        return self.lam == 0


def _check_degree(m):
    if int(m) != m or m < 0:
        raise ValueError(f"degree must be a nonnegative integer, got {m}")
    return int(m)


def gegenbauer(lam, m, t):
    """Gegenbauer polynomial ``C^lam_m(t)`` by the three-term recurrence.

    Defined for every real ``t``; the starred operators need ``|t| > 1``.
    """
    m = _check_degree(m)
    if lam == 0:
        raise ValueError("lam = 0 is the Chebyshev branch; use chebyshev()")
    t = np.asarray(t, dtype=float)
    prev = np.ones_like(t)
    if m == 0:
        return prev if prev.ndim else float(prev)
    cur = 2.0 * lam * t
    for k in range(1, m):
        prev, cur = cur, (2.0 * (k + lam) * t * cur - (k + 2.0 * lam - 1.0) * prev) / (k + 1)
    return cur if cur.ndim else float(cur)


def chebyshev(m, t):
    """Chebyshev polynomial of the first kind ``T_m(t)``."""
    m = _check_degree(m)
    t = np.asarray(t, dtype=float)
    prev = np.ones_like(t)
    if m == 0:
        return prev if prev.ndim else float(prev)
    cur = t.copy()
    for _ in range(1, m):
        prev, cur = cur, 2.0 * t * cur - prev
    return cur if cur.ndim else float(cur)


def kernel_poly(lam, m, t):
    """``C^lam_m(t)`` for ``lam != 0`` and ``T_m(t)`` for ``lam == 0``."""
    return chebyshev(m, t) if lam == 0 else gegenbauer(lam, m, t)


def kernel_poly_reversed(lam, m, u):
    """``u**m * K_m(1/u)`` where ``K_m`` is :func:`kernel_poly`.

    Computed with the recurrence rescaled by powers of ``u`` so that it stays
    finite as ``u -> 0`` (the value there is the leading coefficient).
    """
    m = _check_degree(m)
    u = np.asarray(u, dtype=float)
    u2 = u * u
    prev = np.ones_like(u)
    if m == 0:
        return prev
    if lam == 0:
        cur = np.ones_like(u)
        for _ in range(1, m):
            prev, cur = cur, 2.0 * cur - u2 * prev
        return cur
    cur = np.full_like(u, 2.0 * lam)
    for k in range(1, m):
        prev, cur = cur, (2.0 * (k + lam) * cur - (k + 2.0 * lam - 1.0) * u2 * prev) / (k + 1)
    return cur


def funk_hecke_kernel(n, m, s):
    """Normalized zonal kernel ``P_m`` on ``S^{n-1}``, with ``P_m(1) = 1``.

    ``T_m`` for ``n == 2`` and ``m!(n-3)!/(m+n-3)! C^{n/2-1}_m`` for ``n >= 3``.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    m = _check_degree(m)
    if n == 2:
        return chebyshev(m, s)
    scale = math.factorial(m) * math.factorial(n - 3) / math.factorial(m + n - 3)
    return scale * gegenbauer(n / 2 - 1, m, s)


def normalizing_constant(lam, m):
    """The constant ``c_{lam,m} = Gamma(2lam+m) Gamma(lam+1/2) / (2 m! Gamma(2lam))``."""
    m = _check_degree(m)
    if lam == 0:
        raise ValueError("c_{lam,m} is undefined at lam = 0 (Chebyshev branch)")
    if not lam > -0.5:
        raise ValueError(f"Gegenbauer index must exceed -1/2, got {lam}")
    # Gamma(2lam+m)/Gamma(2lam) = (2lam)_m, finite also for 2lam near a pole
    return float(special.poch(2.0 * lam, m) * special.gamma(lam + 0.5) / (2.0 * math.factorial(m)))


def kernel_constant(lam, m):
    """Constant in front of the Mellin closed forms.

    ``c_{lam,m}`` for Gegenbauer kernels and ``sqrt(pi)/2`` for Chebyshev.
    The one-sided operators carry its reciprocal.
    """
    return math.sqrt(math.pi) / 2.0 if lam == 0 else normalizing_constant(lam, m)


def sh_dimension(n, m):
    """Dimension ``d_n(m)`` of degree ``m`` spherical harmonics on ``S^{n-1}``."""
    m = _check_degree(m)
    if n < 2:
        raise ValueError("n must be at least 2")
    if n == 2:
        return 1 if m == 0 else 2
    return (n + 2 * m - 2) * math.factorial(n + m - 3) // (math.factorial(m) * math.factorial(n - 2))


def sphere_area(n):
    """Surface area ``sigma_{n-1} = 2 pi^{n/2} / Gamma(n/2)`` of ``S^{n-1}`` in R^n."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return 2.0 * math.pi ** (n / 2.0) / math.gamma(n / 2.0)


@lru_cache(maxsize=None)
def zonal_norm(n, m):
    """Factor ``N`` such that ``N P_m(a . theta)`` has unit L2 norm on ``S^{n-1}``.

    Uses ``int P_m(a . theta)**2 d theta = sigma_{n-1} / d_n(m)``.
    """
    return math.sqrt(sh_dimension(n, m) / sphere_area(n))


def _unit(v, name):
    v = np.asarray(v, dtype=float)
    norms = np.linalg.norm(v, axis=-1)
    if np.any(np.abs(norms - 1.0) > 1e-12):
        raise ValueError(f"{name} must be a unit vector")
    return v


def zonal_harmonic(n, m, axis, theta):
    """L2-normalized zonal spherical harmonic of degree ``m`` on ``S^{n-1}``.

    Parameters
    ----------
    n, m : int
        Ambient dimension and degree.
    axis : array_like, shape (n,)
        Unit vector fixing the zonal direction.
    theta : array_like, shape (..., n)
        Unit vectors where the harmonic is evaluated.
    """
    axis = _unit(axis, "axis")
    theta = _unit(theta, "theta")
    if axis.shape[-1] != n or theta.shape[-1] != n:
        raise ValueError("axis and theta must live in R^n")
    s = np.clip(theta @ axis, -1.0, 1.0)
    return zonal_norm(n, m) * funk_hecke_kernel(n, m, s)


# Mellin closed forms.  Both are written as (constant) x (one gamma ratio) x
# (a finite Pochhammer-type product).  The product carries every zero that a
# denominator gamma pole would produce, so those zeros come out exactly.

def _falling(a, k):
    # (a-1)(a-2)...(a-k) = Gamma(a)/Gamma(a-k)
    out = 1.0 + 0.0j
    for j in range(1, k + 1):
        out *= a - j
    return out


def _rising(a, k):
    # a(a+1)...(a+k-1) = Gamma(a+k)/Gamma(a)
    out = 1.0 + 0.0j
    for j in range(k):
        out *= a + j
    return out


def mellin_alpha(lam, m, z):
    """Closed form of ``int_0^1 u^{z-1} (1-u^2)^{lam-1/2} K_m(u) du``.

    ``K_m`` is ``C^lam_m`` (or ``T_m`` when ``lam == 0``).  Valid for
    ``Re z > -eta`` with ``eta = m mod 2``; other ``z`` raise ``ValueError``.
    """
    p = PolyParams(lam, m)
    z = complex(z)
    if not z.real > -p.eta:
        raise ValueError(f"mellin_alpha needs Re z > {-p.eta}, got {z}")
    c = kernel_constant(lam, m)
    if m % 2 == 0:
        # Gamma(z/2) Gamma((z+1)/2)/Gamma((z+1-m)/2) = Gamma(z/2) * falling((z+1)/2, m/2)
        head = special.gamma(z / 2.0) * _falling((z + 1.0) / 2.0, m // 2)
    else:
        head = special.gamma((z + 1.0) / 2.0) * _falling(z / 2.0, (m - 1) // 2)
    return complex(c * head * special.rgamma(lam + (z + 1.0 + m) / 2.0))


def mellin_beta(lam, m, z):
    """Closed form of ``int_0^1 u^{z-1} (1-u^2)^{lam-1/2} K_m(1/u) du``.

    Valid for ``Re z > m``; other ``z`` raise ``ValueError``.
    """
    PolyParams(lam, m)
    z = complex(z)
    if not z.real > m:
        raise ValueError(f"mellin_beta needs Re z > {m}, got {z}")
    c = kernel_constant(lam, m)
    if m % 2 == 0:
        # Gamma(lam+(z+m)/2)/Gamma(lam+z/2) = rising(lam+z/2, m/2)
        head = _rising(lam + z / 2.0, m // 2) * special.rgamma(lam + (z + 1.0) / 2.0)
    else:
        head = _rising(lam + (z + 1.0) / 2.0, (m - 1) // 2) * special.rgamma(lam + z / 2.0)
    return complex(c * special.gamma((z - m) / 2.0) * head)
