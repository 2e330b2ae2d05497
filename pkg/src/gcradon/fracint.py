"""Riemann-Liouville and Erdelyi-Kober fractional integrals on (0, inf).

Definitions (``Gamma`` is the gamma function)::

    I^a_+ f(t)    = 1/Gamma(a) int_0^t f(s) (t-s)^(a-1) ds
    I^a_- f(t)    = 1/Gamma(a) int_t^inf f(s) (s-t)^(a-1) ds
    I^a_{+,2} f(t) = 2/Gamma(a) int_0^t f(s) s (t^2-s^2)^(a-1) ds
    I^a_{-,2} f(t) = 2/Gamma(a) int_t^inf f(s) s (s^2-t^2)^(a-1) ds

The substitutions ``s = t u`` (plus side) and ``s = t / u`` (minus side)
turn each of them into an integral over ``(0, 1)`` with a Jacobi weight at
``u = 1`` (see :mod:`gcradon.quadrature`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

from .errors import DivergentIntegral, FormInapplicable, NonPositiveT
from .profiles import INF, RadialProfile
from .quadrature import DEFAULT_CONFIG, Estimate, QuadratureConfig, chebyshev_derivative, integrate_unit

__all__ = [
    "Existence",
    "FracParams",
    "frac_derivative",
    "frac_existence",
    "frac_integral",
    "frac_integral_profile",
    "onesided_integral",
]

SIDES = ("plus", "minus")
VARIANTS = ("riemann_liouville", "erdelyi_kober")
FORMS = ("integer_power", "standard", "moment_iii", "alt_iv")
_ALIASES = {"rl": "riemann_liouville", "ek": "erdelyi_kober"}
# evaluation points per batch inside derived profiles
CHUNK = 256
# cap on the extra geometric panels added for extreme arguments
MAX_EXTRA_LEVELS = 40


@dataclass(frozen=True)
class FracParams:
    """Order, side and variant of a fractional integral.

    Parameters
    ----------
    alpha : float
        Order, strictly positive.
    side : {"plus", "minus"}
        ``plus`` integrates over ``(0, t)``, ``minus`` over ``(t, inf)``.
    variant : {"riemann_liouville", "erdelyi_kober"}
        ``"rl"`` and ``"ek"`` are accepted as shorthands.
    """

    alpha: float
    side: str = "plus"
    variant: str = "riemann_liouville"

    def __post_init__(self):
        object.__setattr__(self, "variant", _ALIASES.get(self.variant, self.variant))
        if not self.alpha > 0:
            raise ValueError(f"order must be positive, got {self.alpha}")
        if self.side not in SIDES:
            raise ValueError(f"side must be one of {SIDES}, got {self.side!r}")
        if self.variant not in VARIANTS:
            raise ValueError(f"variant must be one of {VARIANTS}, got {self.variant!r}")

    @property
    def is_ek(self) -> bool:
        return self.variant == "erdelyi_kober"

    def with_alpha(self, alpha: float) -> "FracParams":
        return FracParams(alpha, self.side, self.variant)


class Existence(NamedTuple):
    """Outcome of an existence predicate; truthy when the integral exists."""

    ok: bool
    reason: str

    def __bool__(self) -> bool:
        return self.ok


def frac_existence(p: FracParams, f: RadialProfile) -> Existence:
    """Check the moment condition under which the fractional integral is finite.

    Minus side: ``int_a^inf |f(s)| s^(alpha-1) ds < inf`` (RL) or
    ``int_a^inf |f(s)| s^(2 alpha-1) ds < inf`` (EK), i.e. ``decay > alpha``
    or ``decay > 2 alpha``.  Plus side: local integrability at the origin,
    ``sing0 > -1`` (RL) or ``sing0 > -2`` (EK).
    """
    if f.is_zero:
        return Existence(True, "zero profile")
    if p.side == "minus":
        need = 2 * p.alpha if p.is_ek else p.alpha
        if f.support[1] < INF or f.decay > need:
            return Existence(True, f"decay {f.decay} > {need}")
        power = "2*alpha-1" if p.is_ek else "alpha-1"
        return Existence(False, f"int^inf |f(s)| s^({power}) ds diverges: decay {f.decay} <= {need}")
    need = -2.0 if p.is_ek else -1.0
    if f.support[0] > 0 or f.sing0 > need:
        return Existence(True, f"sing0 {f.sing0} > {need}")
    weight = "s" if p.is_ek else "1"
    return Existence(False, f"int_0 |f(s)| {weight} ds diverges: sing0 {f.sing0} <= {need}")


def _as_t(t) -> np.ndarray:
    t = np.asarray(t, dtype=float)
    if np.any(~(t > 0)):
        raise NonPositiveT("operators on the half line need t > 0")
    return t


def _levels(t: np.ndarray, minus: bool, flat: bool, cfg: QuadratureConfig) -> tuple[np.ndarray, np.ndarray]:
    # features of f(t/u) sit near u ~ t for small t, those of f(t u) near
    # u ~ 1/t for large t; a flat end of f also squeezes the integrand
    # into a layer of width ~ 1/t^2 (minus) or ~ t (plus) at u = 1
    with np.errstate(divide="ignore"):
        x = np.log2(1.0 / t) if minus else np.log2(t)
    x = np.nan_to_num(x, posinf=MAX_EXTRA_LEVELS, neginf=-MAX_EXTRA_LEVELS)
    start = np.ceil(np.clip(x, 0.0, MAX_EXTRA_LEVELS)).astype(int)
    end = np.zeros(t.shape, dtype=int)
    if flat:
        end = np.ceil(np.clip(-2.0 * x if minus else -x, 0.0, MAX_EXTRA_LEVELS)).astype(int)
    return cfg.levels + start, end


def onesided_integral(
    f: RadialProfile,
    t,
    side: str,
    kernel: Callable[[np.ndarray], np.ndarray] | None,
    u_power: float,
    end_exp: float,
    cfg: QuadratureConfig = DEFAULT_CONFIG,
) -> Estimate:
    """Evaluate ``int_0^1 K(u) (1-u)^end_exp u^u_power f(t/u or t u) du``.

    ``side="minus"`` uses ``f(t/u)``, ``side="plus"`` uses ``f(t u)``.  The
    power behaviour of ``f`` at the matching end is moved into the Jacobi
    weight at ``u = 0``; support limits and break points of ``f`` become
    integration limits and panel edges.
    """
    t = np.asarray(t, dtype=float)
    shape = t.shape
    tf = t.reshape(-1)
    if f.is_zero:
        z = np.zeros(shape)
        return Estimate(z, z, z)
    minus = side == "minus"
    a = f.tail_power if minus else f.start_power
    flat = math.isinf(f.decay if minus else f.sing0)
    # a flat end needs no Jacobi weight; the u-power is applied pointwise
    explicit = u_power if flat else 0.0
    start = 0.0 if flat else u_power + a

    def make(tt):
        tt = tt[:, None]

        def integrand(u):
            arg = tt / u if minus else tt * u
            vals = f(arg)
            if a != 0.0:
                vals = vals * u ** (-a)
            if explicit != 0.0:
                vals = vals * u**explicit
            if kernel is not None:
                vals = vals * kernel(u)
            return vals

        return integrand

    levels, end_levels = _levels(tf, minus, flat, cfg)
    if not f.has_breaks:
        out = np.zeros((3, tf.size))
        for lv, el in set(zip(levels.tolist(), end_levels.tolist())):
            sel = (levels == lv) & (end_levels == el)
            est = integrate_unit(
                make(tf[sel]), end_exp=end_exp, start_exp=start, end_levels=el, cfg=cfg.replace(levels=lv)
            )
            out[:, sel] = est
        return Estimate(*(x.reshape(shape) for x in out))

    r_lo, r_hi = f.support
    # compactly supported profiles: accept errors below rtol * sup|f| * int|weight|
    peak = _peak(f) if cfg.check and r_hi < INF else 0.0

    def bound(u):
        vals = np.full((1, u.size), peak)
        if a != 0.0:
            vals = vals * u ** (-a)
        if explicit != 0.0:
            vals = vals * u**explicit
        if kernel is not None:
            vals = vals * np.abs(kernel(u))
        return vals

    out = np.zeros((3, tf.size))
    for i, ti in enumerate(tf):
        if minus:
            lo = 0.0 if r_hi == INF else ti / r_hi
            hi = 1.0 if r_lo == 0 else min(1.0, ti / r_lo)
            brk = tuple(ti / b for b in f.breaks if b > 0)
        else:
            lo = r_lo / ti
            hi = 1.0 if r_hi == INF else min(1.0, r_hi / ti)
            brk = tuple(b / ti for b in f.breaks)
        if lo >= hi:
            continue
        cfg_i = cfg.replace(levels=int(levels[i]))
        opts = dict(end_exp=end_exp, start_exp=start, lo=lo, hi=hi, breaks=brk, end_levels=int(end_levels[i]))
        if peak > 0:
            ref = integrate_unit(bound, cfg=cfg_i.inner(), **opts)
            cfg_i = cfg_i.replace(atol=max(cfg.atol, cfg.rtol * float(ref.scale[0])))
        est = integrate_unit(make(np.array([ti])), cfg=cfg_i, **opts)
        out[:, i] = [est.value[0], est.error[0], est.scale[0]]
    return Estimate(*(x.reshape(shape) for x in out))


def _peak(f: RadialProfile) -> float:
    # sup |f| over its (bounded) support, sampled
    lo, hi = f.support
    r = np.linspace(lo, hi, 1025)[1:-1]
    with np.errstate(all="ignore"):
        vals = np.abs(f(r))
    vals = vals[np.isfinite(vals)]
    return float(vals.max()) if vals.size else 0.0


def _frac_estimate(p: FracParams, f: RadialProfile, t, cfg) -> tuple[np.ndarray, Estimate]:
    a = p.alpha
    if p.is_ek:
        kernel = None if a == 1 else (lambda u: (1.0 + u) ** (a - 1.0))
        u_power = 1.0 if p.side == "plus" else -2.0 * a - 1.0
        pref = 2.0 * t ** (2.0 * a) / math.gamma(a)
    else:
        kernel = None
        u_power = 0.0 if p.side == "plus" else -a - 1.0
        pref = t**a / math.gamma(a)
    est = onesided_integral(f, t, p.side, kernel, u_power, a - 1.0, cfg)
    return pref, est


def frac_integral(p: FracParams, f: RadialProfile, t, cfg: QuadratureConfig | None = None, full_output: bool = False):
    """Fractional integral ``I^alpha_{+-}`` or ``I^alpha_{+-,2}`` of ``f`` at ``t``.

    Parameters
    ----------
    p : FracParams
    f : RadialProfile
    t : float or array_like
        Evaluation points, all positive.
    cfg : QuadratureConfig, optional
    full_output : bool
        Also return a dict with the quadrature error estimate and the
        integral of the absolute integrand.

    Raises
    ------
    DivergentIntegral
        If :func:`frac_existence` fails.
    NonPositiveT
        If some ``t <= 0``.
    """
    cfg = cfg or DEFAULT_CONFIG
    t = _as_t(t)
    ex = frac_existence(p, f)
    if not ex:
        raise DivergentIntegral(ex.reason)
    pref, est = _frac_estimate(p, f, t, cfg)
    value = pref * est.value
    value = float(value) if value.ndim == 0 else value
    if full_output:
        return value, {"error": pref * est.error, "scale": pref * est.scale}
    return value


def _product(pair):
    pref, est = pair
    return pref * est.value


def chunked(fn: Callable[[np.ndarray], np.ndarray], r: np.ndarray, size: int = CHUNK) -> np.ndarray:
    """Apply ``fn`` to a flat array in slices, bounding nested batch sizes."""
    r = r.reshape(-1)
    if r.size <= size:
        return fn(r)
    return np.concatenate([fn(r[i : i + size]) for i in range(0, r.size, size)])


def _derived_exponents(p: FracParams, f: RadialProfile) -> tuple[float, float]:
    a = 2 * p.alpha if p.is_ek else p.alpha
    flat_at = 2.0 if p.is_ek else 1.0
    if p.side == "plus":
        sing0 = f.sing0 + a if f.support[0] == 0 else INF
        decay = min(f.decay, flat_at) - a
    else:
        sing0 = min(0.0, f.sing0 + a) if f.support[1] == INF else 0.0
        decay = f.decay - a
    return sing0, decay


def frac_integral_profile(p: FracParams, f: RadialProfile, cfg: QuadratureConfig | None = None) -> RadialProfile:
    """The fractional integral of ``f`` as a new profile (evaluated lazily)."""
    cfg = (cfg or DEFAULT_CONFIG).inner()
    ex = frac_existence(p, f)
    if not ex:
        raise DivergentIntegral(ex.reason)
    sing0, decay = _derived_exponents(p, f)
    lo, hi = f.support
    support = (lo, INF) if p.side == "plus" else (0.0, hi)
    breaks = tuple(sorted({b for b in (*f.breaks, lo, hi) if 0 < b < INF}))

    def func(r):
        r = np.asarray(r, dtype=float)
        out = np.zeros(r.shape)
        pos = r > 0
        if np.any(pos):
            out[pos] = chunked(lambda x: _product(_frac_estimate(p, f, x, cfg)), r[pos])
        return out

    return RadialProfile(func, sing0, decay, "", support, breaks)


def _power_times(f: RadialProfile, q: float) -> RadialProfile:
    return f if q == 0 else f.times_power(q)


def _rl_derivative(side: str, beta: float, g: RadialProfile, t: float, cfg: QuadratureConfig) -> float:
    # D^beta_{+-} g = (+-d/dt)^(k+1) I^(1-beta0)_{+-} g, or (+-d/dt)^beta for integer beta
    k = math.floor(beta + 1e-12)
    b0 = beta - k
    if abs(b0) < 1e-12:
        order, inner = k, g
    else:
        order, inner = k + 1, _checked(FracParams(1.0 - b0, side), g, cfg)
    sign = (-1.0) ** order if side == "minus" else 1.0
    return sign * chebyshev_derivative(inner, t, order, cfg=cfg)


def _ek_derivative(side: str, beta: float, g: RadialProfile, t: float, cfg: QuadratureConfig) -> float:
    # (+-D)^(k+1) I^(1-beta0)_{+-,2} g with D = (1/2t) d/dt
    k = math.floor(beta + 1e-12)
    b0 = beta - k
    if abs(b0) < 1e-12:
        order, inner = k, g
    else:
        order, inner = k + 1, _checked(FracParams(1.0 - b0, side, "erdelyi_kober"), g, cfg)
    sign = (-1.0) ** order if side == "minus" else 1.0
    return sign * chebyshev_derivative(inner, t, order, squared=True, cfg=cfg)


def _checked(p: FracParams, g: RadialProfile, cfg: QuadratureConfig):
    # top-level (error checked) evaluation of I^p g at the interpolation nodes
    ex = frac_existence(p, g)
    if not ex:
        raise DivergentIntegral(ex.reason)

    def func(s):
        pref, est = _frac_estimate(p, g, np.asarray(s, dtype=float), cfg)
        return pref * est.value

    return func


def frac_derivative(
    p: FracParams,
    g: RadialProfile,
    t: float,
    form: str | None = None,
    cfg: QuadratureConfig | None = None,
) -> float:
    """Fractional derivative of order ``p.alpha``, the left inverse of :func:`frac_integral`.

    Forms
    -----
    ``integer_power``
        Integer ``alpha`` only: ``(+-d/dt)^alpha g`` (RL) or ``(+-D)^alpha g``
        with ``D = (1/2t) d/dt`` (EK).
    ``standard``
        RL: ``(+-d/dt)^(m+1) I^(1-alpha0)_{+-} g`` with ``m = floor(alpha)``,
        ``alpha0 = alpha - m``.  EK plus: ``D^(m+1) I^(1-alpha0)_{+,2} g``.
        EK minus: ``t^(2(1-alpha+m)) (-D)^(m+1) t^(2 alpha) psi`` with
        ``psi = I^(1-alpha+m)_{-,2} t^(-2m-2) g``.
    ``moment_iii``
        EK minus: ``(-D)^(m+1) I^(1-alpha+m)_{-,2} g``; needs the stronger
        moment condition ``int^inf |f| s^(2m+1) ds < inf`` on the original f.
    ``alt_iv``
        EK minus: ``2^(-2 alpha) D^(2 alpha)_- t I^alpha_{-,2} t^(-2 alpha - 1) g``
        with an RL derivative of order ``2 alpha``.  Default for EK minus.

    Derivatives are taken from a local Chebyshev interpolant of the inner
    function (see :func:`gcradon.quadrature.chebyshev_derivative`).
    """
    cfg = cfg or DEFAULT_CONFIG
    if not t > 0:
        raise NonPositiveT("operators on the half line need t > 0")
    t = float(t)
    a = p.alpha
    is_int = abs(a - round(a)) < 1e-12
    if form is None:
        form = "alt_iv" if (p.is_ek and p.side == "minus") else "standard"
    if form not in FORMS:
        raise ValueError(f"form must be one of {FORMS}, got {form!r}")
    if g.is_zero:
        return 0.0
    m = math.floor(a + 1e-12)

    if form == "integer_power":
        if not is_int:
            raise FormInapplicable(f"integer_power form needs an integer order, got {a}")
        sign = (-1.0) ** round(a) if p.side == "minus" else 1.0
        return sign * chebyshev_derivative(g, t, round(a), squared=p.is_ek, cfg=cfg)

    if not p.is_ek:
        if form != "standard":
            raise FormInapplicable(f"form {form!r} applies to Erdelyi-Kober minus only")
        return _rl_derivative(p.side, a, g, t, cfg)

    if p.side == "plus":
        if form != "standard":
            raise FormInapplicable(f"form {form!r} applies to Erdelyi-Kober minus only")
        return _ek_derivative("plus", a, g, t, cfg)

    if form == "moment_iii":
        if is_int:
            return (-1.0) ** round(a) * chebyshev_derivative(g, t, round(a), squared=True, cfg=cfg)
        return _ek_derivative("minus", a, g, t, cfg)

    if form == "standard":
        order = 1.0 - a + m
        q = FracParams(order, "minus", "erdelyi_kober")
        psi = _checked(q, _power_times(g, -2.0 * m - 2.0), cfg)

        def inner(s):
            s = np.asarray(s, dtype=float)
            return s ** (2.0 * a) * psi(s)

        d = chebyshev_derivative(inner, t, m + 1, squared=True, cfg=cfg)
        return t ** (2.0 * order) * (-1.0) ** (m + 1) * d

    # alt_iv
    ek = FracParams(a, "minus", "erdelyi_kober")
    inner = frac_integral_profile(ek, _power_times(g, -2.0 * a - 1.0), cfg).times_power(1.0)
    return 2.0 ** (-2.0 * a) * _rl_derivative("minus", 2.0 * a, inner, t, cfg)
