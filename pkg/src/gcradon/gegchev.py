"""The eight one-sided Gegenbauer-Chebyshev fractional integrals.

With ``c = c_{lam,m}`` and ``K_m = C^lam_m`` (``T_m`` and ``c = sqrt(pi)/2``
when ``lam == 0``)::

    G_-  f(t) = 1/c int_t^inf (r^2-t^2)^(lam-1/2) K_m(t/r) f(r) r dr
    *G_- f(t) = t/c int_t^inf (r^2-t^2)^(lam-1/2) K_m(r/t) f(r) r^(-2lam-1) dr
    G_+  f(r) = r^(-2lam)/c int_0^r (r^2-t^2)^(lam-1/2) K_m(t/r) f(t) dt
    *G_+ f(r) = 1/c int_0^r (r^2-t^2)^(lam-1/2) K_m(r/t) f(t) t dt

After ``r = t/u`` (minus) or ``t = r u`` (plus) each becomes an integral over
``(0, 1)`` against ``(1-u^2)^(lam-1/2)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DivergentIntegral, FormInapplicable, InvalidKernelIndex
from .fracint import (
    Existence,
    FracParams,
    _as_t,
    _checked,
    _product,
    chunked,
    frac_derivative,
    frac_integral,
    frac_integral_profile,
    onesided_integral,
)
from .profiles import INF, RadialProfile, power
from .quadrature import DEFAULT_CONFIG, QuadratureConfig, chebyshev_derivative
from .specfun import PolyParams, kernel_constant, kernel_poly, kernel_poly_reversed

__all__ = [
    "GCOperator",
    "check_composition",
    "gc_apply",
    "gc_apply_profile",
    "gc_existence",
    "gc_invert",
    "gc_kernel_witness",
    "gc_reciprocal_transfer",
    "gc_reduction",
    "reciprocal",
    "starred_derivative",
]


@dataclass(frozen=True)
class GCOperator:
    """Selects one of the eight operators.

    Parameters
    ----------
    lam : float
        Index ``> -1/2``; ``0`` selects the Chebyshev operators.
    m : int
        Degree.
    side : {"minus", "plus"}
    starred : bool
    """

    lam: float
    m: int
    side: str = "minus"
    starred: bool = False

    def __post_init__(self):
        PolyParams(self.lam, self.m)
        object.__setattr__(self, "m", int(self.m))
        if self.side not in ("minus", "plus"):
            raise ValueError(f"side must be 'minus' or 'plus', got {self.side!r}")

    @property
    def eta(self) -> int:
        return self.m % 2

    def star(self) -> "GCOperator":
        """The operator with the starred flag flipped."""
        return GCOperator(self.lam, self.m, self.side, not self.starred)

    @property
    def name(self) -> str:
        base = "T" if self.lam == 0 else "G"
        sign = "-" if self.side == "minus" else "+"
        return f"{'*' if self.starred else ''}{base}{sign}(lam={self.lam:g},m={self.m})"


def gc_existence(op: GCOperator, f: RadialProfile) -> Existence:
    """Moment condition under which ``op f`` converges absolutely.

    * ``G_-, T_-``:   ``int_a^inf |f| t^(2lam-eta) dt < inf``
    * ``*G_-, *T_-``: ``int_a^inf |f| t^(m-2) dt < inf``
    * ``G_+, T_+``:   ``int_0^a t^eta |f| dt < inf``
    * ``*G_+, *T_+``: ``int_0^a t^(1-m) |f| dt < inf``
    """
    if f.is_zero:
        return Existence(True, "zero profile")
    lam, m, eta = op.lam, op.m, op.eta
    if op.side == "minus":
        if f.support[1] < INF:
            return Existence(True, "compact support")
        q = m - 2 if op.starred else 2 * lam - eta
        cond = f"int_a^inf |f(t)| t^{q:g} dt < inf"
        if f.decay > q + 1:
            return Existence(True, cond)
        return Existence(False, f"{cond} fails: decay {f.decay:g} <= {q + 1:g}")
    if f.support[0] > 0:
        return Existence(True, "support away from the origin")
    q = 1 - m if op.starred else eta
    cond = f"int_0^a t^{q:g} |f(t)| dt < inf"
    if f.sing0 > -1 - q:
        return Existence(True, cond)
    return Existence(False, f"{cond} fails: sing0 {f.sing0:g} <= {-1 - q:g}")


def _pieces(op: GCOperator):
    """Kernel function, u-power, end exponent and t-power for ``op``."""
    lam, m, eta = op.lam, op.m, op.eta
    e = lam - 0.5

    def weight(u):
        return (1.0 + u) ** e if e != 0 else 1.0

    if op.starred:
        def kernel(u):
            return weight(u) * kernel_poly_reversed(lam, m, u)

        u_power = -float(m) if op.side == "minus" else 1.0 - m
        t_power = 0.0 if op.side == "minus" else 2 * lam + 1
    else:
        def kernel(u):
            k = kernel_poly(lam, m, u)
            return weight(u) * (k / u if eta else k)

        u_power = (-2 * lam - 2 + eta) if op.side == "minus" else float(eta)
        t_power = 2 * lam + 1 if op.side == "minus" else 0.0
    return kernel, u_power, e, t_power


def _apply_estimate(op: GCOperator, f: RadialProfile, t: np.ndarray, cfg: QuadratureConfig):
    kernel, u_power, e, t_power = _pieces(op)
    est = onesided_integral(f, t, op.side, kernel, u_power, e, cfg)
    pref = t**t_power / kernel_constant(op.lam, op.m)
    return pref, est


def gc_apply(op: GCOperator, f: RadialProfile, t, cfg: QuadratureConfig | None = None, full_output: bool = False):
    """Apply a Gegenbauer-Chebyshev operator to ``f`` at ``t > 0``.

    The direct kernel formula is used for every degree; the reductions to
    Erdelyi-Kober integrals for ``m`` in ``{0, 1}`` are available separately
    as :func:`gc_reduction`.

    Returns
    -------
    value : float or ndarray
    info : dict, only with ``full_output=True``
        ``error`` (quadrature estimate) and ``scale`` (integral of the
        absolute integrand, in the same units as ``value``).
    """
    cfg = cfg or DEFAULT_CONFIG
    t = _as_t(t)
    ex = gc_existence(op, f)
    if not ex:
        raise DivergentIntegral(ex.reason)
    pref, est = _apply_estimate(op, f, t, cfg)
    value = pref * est.value
    value = float(value) if value.ndim == 0 else value
    if full_output:
        return value, {"error": pref * est.error, "scale": pref * est.scale}
    return value


def _output_exponents(op: GCOperator, f: RadialProfile) -> tuple[float, float]:
    # power behaviour of op f at 0 and at infinity (lower bounds where the
    # leading coefficient may vanish)
    lam, m, eta = op.lam, op.m, op.eta
    s = 2 * lam + 1
    if op.side == "minus":
        if op.starred:
            return 1.0 - m, f.decay
        return min(float(eta), f.sing0 + s), f.decay - s
    if op.starred:
        return f.sing0 + s, min(f.decay - s, -(s + m - 2))
    return f.sing0, min(f.decay, 1.0 + eta)


def gc_apply_profile(
    op: GCOperator, f: RadialProfile, cfg: QuadratureConfig | None = None, nested: bool = True
) -> RadialProfile:
    """``op f`` as a lazily evaluated profile.

    With ``nested=True`` (default) evaluations skip the two-resolution error
    check, which is the right choice when the result feeds another integral.
    """
    cfg = cfg or DEFAULT_CONFIG
    if nested:
        cfg = cfg.inner()
    ex = gc_existence(op, f)
    if not ex:
        raise DivergentIntegral(ex.reason)
    if f.is_zero:
        return f
    sing0, decay = _output_exponents(op, f)
    lo, hi = f.support
    support = (0.0, hi) if op.side == "minus" else (lo, INF)
    breaks = tuple(sorted({b for b in (*f.breaks, lo, hi) if 0 < b < INF}))

    def func(r):
        r = np.asarray(r, dtype=float)
        out = np.zeros(r.shape)
        pos = r > 0
        if np.any(pos):
            out[pos] = chunked(lambda x: _product(_apply_estimate(op, f, x, cfg)), r[pos])
        return out

    return RadialProfile(func, sing0, decay, "", support, breaks)


def gc_reduction(op: GCOperator, f: RadialProfile, t, cfg: QuadratureConfig | None = None):
    """Evaluate a degree 0 or 1 right-sided operator through Erdelyi-Kober integrals.

    With ``a = lam + 1/2`` and ``J = I^a_{-,2}``::

        G^{lam,0}_- f = J f              G^{lam,1}_- f = t J (t^-1 f)
        *G^{lam,0}_- f = t J (t^(-2lam-2) f)   *G^{lam,1}_- f = J (t^(-2lam-1) f)
    """
    if op.side != "minus" or op.m > 1:
        raise FormInapplicable("reductions exist for right-sided operators of degree 0 and 1")
    t = _as_t(t)
    lam = op.lam
    p = FracParams(lam + 0.5, "minus", "erdelyi_kober")
    if not op.starred:
        if op.m == 0:
            return frac_integral(p, f, t, cfg)
        return t * frac_integral(p, f.times_power(-1.0), t, cfg)
    if op.m == 0:
        return t * frac_integral(p, f.times_power(-2 * lam - 2), t, cfg)
    return frac_integral(p, f.times_power(-2 * lam - 1), t, cfg)


def gc_kernel_witness(side: str, lam: float, m: int, k: int) -> RadialProfile:
    """Power profile annihilated by ``G^{lam,m}_{side}``.

    ``t^(-2lam-k-2)`` for the right-sided and ``t^k`` for the left-sided
    operator, where ``0 <= k <= m-2`` and ``m - k`` is even.
    """
    if side not in ("minus", "plus"):
        raise ValueError(f"side must be 'minus' or 'plus', got {side!r}")
    PolyParams(lam, m)
    if int(k) != k or m < 2 or not (0 <= k <= m - 2) or (m - k) % 2:
        raise InvalidKernelIndex(f"need m >= 2, 0 <= k <= m-2 and m-k even; got m={m}, k={k}")
    return power(k) if side == "plus" else power(-2.0 * lam - k - 2.0)


def check_composition(
    lam: float, m: int, side: str, f: RadialProfile, t, cfg: QuadratureConfig | None = None
):
    """Both sides of ``*G G f = 2^(2lam+1) I^(2lam+1) f`` (``*T T f = 2 I^1 f``).

    Returns ``(lhs, rhs, lhs - rhs)`` at ``t``.  The hypothesis is
    ``int_a^inf |f| t^(2lam+m-1) dt < inf`` (minus) or
    ``int_0^a t^(1-m) |f| dt < inf`` (plus); a violation raises
    :class:`DivergentIntegral`.
    """
    cfg = cfg or DEFAULT_CONFIG
    op = GCOperator(lam, m, side)
    if side == "minus":
        q = 2 * lam + m - 1
        ok = f.support[1] < INF or f.decay > q + 1
        cond = f"int_a^inf |f(t)| t^{q:g} dt < inf"
    else:
        ok = f.support[0] > 0 or f.sing0 > m - 2
        cond = f"int_0^a t^{1 - m} |f(t)| dt < inf"
    if not ok:
        raise DivergentIntegral(f"composition hypothesis {cond} fails")
    inner = gc_apply_profile(op, f, cfg)
    lhs = gc_apply(op.star(), inner, t, cfg)
    order = 2 * lam + 1
    rhs = 2.0**order * frac_integral(FracParams(order, side), f, t, cfg)
    return lhs, rhs, lhs - rhs


def starred_derivative(op: GCOperator, g: RadialProfile, t: float, cfg: QuadratureConfig) -> float:
    """``D^(2lam+1)_{side} (*op g)(t)``: Riemann-Liouville derivative of the starred image."""
    star = op.star() if not op.starred else op
    order = 2 * op.lam + 1
    k = math.floor(order + 1e-12)
    frac = order - k
    if abs(frac) < 1e-12:
        h = gc_apply_profile(star, g, cfg, nested=False)
        sign = (-1.0) ** k if op.side == "minus" else 1.0
        return sign * chebyshev_derivative(h, float(t), k, cfg=cfg)
    h = gc_apply_profile(star, g, cfg)
    outer = _checked(FracParams(1.0 - frac, op.side), h, cfg)
    sign = (-1.0) ** (k + 1) if op.side == "minus" else 1.0
    return sign * chebyshev_derivative(outer, float(t), k + 1, cfg=cfg)


def gc_invert(op: GCOperator, g: RadialProfile, t: float, cfg: QuadratureConfig | None = None) -> float:
    """Recover ``f`` from ``g = op f`` for an unstarred operator.

    * right side, ``m >= 2``: ``f = 2^(-2lam-1) D^(2lam+1)_- *G g``
      (``f = -1/2 d/dt *T g`` when ``lam == 0``);
    * right side, ``m`` in ``{0, 1}``: Erdelyi-Kober inversion of the
      reductions listed in :func:`gc_reduction`;
    * left side, every ``m``: ``f = 2^(-2lam-1) D^(2lam+1)_+ *G_+ g``.
    """
    cfg = cfg or DEFAULT_CONFIG
    if op.starred:
        raise FormInapplicable("inversion is provided for unstarred operators")
    if not t > 0:
        _as_t(t)
    if g.is_zero:
        return 0.0
    if op.side == "minus" and op.m < 2:
        p = FracParams(op.lam + 0.5, "minus", "erdelyi_kober")
        if op.m == 0:
            return frac_derivative(p, g, t, cfg=cfg)
        return t * frac_derivative(p, g.times_power(-1.0), t, cfg=cfg)
    return 2.0 ** (-2 * op.lam - 1) * starred_derivative(op, g, t, cfg)


def reciprocal(f: RadialProfile, q: float) -> RadialProfile:
    """The profile ``t -> t^q f(1/t)``."""
    if f.is_zero:
        return f
    func = f.func

    def h(t):
        t = np.asarray(t, dtype=float)
        return t**q * func(1.0 / t)

    lo, hi = f.support
    support = (0.0 if hi == INF else 1.0 / hi, INF if lo == 0 else 1.0 / lo)
    breaks = tuple(sorted(1.0 / b for b in f.breaks if b > 0))
    return RadialProfile(h, q + f.decay, f.sing0 - q, "", support, breaks)


def gc_reciprocal_transfer(
    f: RadialProfile, lam: float, m: int, r, starred: bool = False, cfg: QuadratureConfig | None = None
) -> float:
    """Max discrepancy of the reflection ``t -> 1/t`` between the two sides.

    ``G_+ f(r) = (1/r) G_- f1(1/r)`` with ``f1(t) = t^(-2lam-2) f(1/t)`` and
    ``*G_+ f(r) = r^(2lam) *G_- f2(1/r)`` with ``f2(t) = f(1/t)/t``.
    """
    r = _as_t(r)
    plus = GCOperator(lam, m, "plus", starred)
    minus = GCOperator(lam, m, "minus", starred)
    lhs = gc_apply(plus, f, r, cfg)
    if starred:
        rhs = r ** (2 * lam) * gc_apply(minus, reciprocal(f, -1.0), 1.0 / r, cfg)
    else:
        rhs = gc_apply(minus, reciprocal(f, -2 * lam - 2), 1.0 / r, cfg) / r
    return float(np.max(np.abs(np.asarray(lhs) - np.asarray(rhs))))
