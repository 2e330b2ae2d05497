"""Registry of numerical invariants run by ``gcradon verify``.

Every :class:`Check` computes one error figure (absolute, relative or
scaled, as its description says) and passes when that figure is strictly
below its tolerance.  Checks tagged ``expect="conflict"`` evaluate a stated
identity that does not hold as written; they pass the run while the
identity keeps failing and turn into failures if it ever starts to hold.

The ``anchors`` of a check are the labels of the statements it exercises.
They are data labels only, collected in :data:`REQUIRED_ANCHORS`.
"""

from __future__ import annotations

import dataclasses
import math
import time
import warnings
import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fnmatch import fnmatch
from typing import Callable

import numpy as np
from scipy import integrate

from .errors import DivergentIntegral, GCRadonError
from .fracint import FracParams, frac_derivative, frac_existence, frac_integral, frac_integral_profile
from .gegchev import (
    GCOperator,
    check_composition,
    gc_apply,
    gc_apply_profile,
    gc_existence as gc_existence_of,
    gc_invert,
    gc_kernel_witness,
    gc_reduction,
)
from .profiles import INF, RadialProfile, bump, exponential, gaussian, gaussian_moment, power, rational, two_sided
from .projective import (
    _PATHS,
    MEASURE_IDENTITIES,
    ChartProfile,
    GeodesicSphereCoord,
    HyperbolicDualProfile,
    ProjectiveMap,
    _directions,
    funk_forward,
    funk_kernel_profile,
    hyperbolic_dual,
    hyperbolic_forward,
    hyperbolic_kernel_profile,
    hyperbolic_point,
    measure_transfer_check,
    slice_forward,
    slice_invert_profile,
    slice_kernel_profile,
    slice_profile,
    slice_zonal_forward,
    sphere_mean_forward,
    sphere_mean_invert_profile,
    sphere_mean_kernel_profile,
    sphere_mean_profile,
    support_scan_projective,
)
from .radon_sh import (
    HarmonicProfile,
    HyperplaneCoord,
    conjugation_check,
    dual_radon_brute_force,
    dual_radon_profile,
    kernel_profile,
    radon_brute_force,
    radon_forward_profile,
    radon_invert_profile,
    radon_profile_forward,
    radon_radial,
    support_scan,
)
from .specfun import chebyshev, gegenbauer, kernel_poly, kernel_poly_reversed, mellin_alpha, mellin_beta, zonal_harmonic
from .sphere import fibonacci_sphere, sphere_rule, unit

__all__ = [
    "CHECKS",
    "REQUIRED_ANCHORS",
    "Check",
    "CheckResult",
    "anchor_coverage",
    "run_checks",
    "select_checks",
]

# labels of every statement the verify report must cover
REQUIRED_ANCHORS = (
    "89zse", "89zse1t", "lif", "lifa2", "78awqe", "viat", "rtra1", "hpplz3", "rese", "byvs1",
    "duas3", "durt", "iozesf", "jikbVF", "jikb", "jikbBU", "4gt6a", "4gt6a1tle", "lo8xw",
    "lo8xwADD", "89srg", "marti", "89n6g", "89n6gle", "mlpzx", "mlpzxle", "Funk-Hecke", "ppo9j",
    "ppo9q", "recon65", "012aq", "012aq2", "zaeh", "zaehle4", "azw1a2", "zaehle4RA", "azw1a2R",
    "azw1a2R2", "Corma", "CormaQ", "llyinteg", "llyinteg1", "zaehQuin", "zaehQusu", "Con22on",
    "Con22on1", "Con22on22", "byvs1SPH", "SPHSup", "786NGR1SP", "MUIT", "stereoviat",
    "stereoviatS", "stereoscp2", "llhericeg1", "zasliep", "zasli", "mmqAAWS", "3.6-HYP",
    "3.A6-HYP", "HYYscp2", "786NGR", "786NGR1",
)

STATUSES = ("pass", "fail", "error", "conflict", "unexpected_pass")


@dataclass(frozen=True)
class Check:
    """One registered invariant.

    ``fn(rng)`` returns the error figure compared against ``tol``.
    """

    id: str
    anchors: tuple
    tol: float
    fn: Callable[[np.random.Generator], float] = dataclasses.field(repr=False, compare=False)
    description: str = ""
    expect: str = "pass"

    @property
    def anchor(self) -> str:
        return ",".join(self.anchors)


@dataclass(frozen=True)
class CheckResult:
    id: str
    anchor: str
    status: str
    max_error: float
    tol: float
    runtime_ms: float
    message: str = ""

    @property
    def ok(self) -> bool:
        return self.status in ("pass", "conflict")

    def as_dict(self) -> dict:
        return dataclasses.asdict(self)


def _rng(seed: int, check_id: str) -> np.random.Generator:
    return np.random.default_rng([int(seed), zlib.crc32(check_id.encode())])


def _relmax(lhs, rhs, floor: float = 0.0) -> float:
    lhs = np.asarray(lhs, dtype=float)
    rhs = np.asarray(rhs, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        rel = np.abs(lhs - rhs) / np.maximum(np.abs(rhs), floor)
    # exact agreement (including 0 = 0 off a support) is no error
    rel = np.where(lhs == rhs, 0.0, rel)
    return float(np.max(np.where(np.isnan(rel), np.inf, rel)))


# ---------------------------------------------------------------------------
# specfun
# ---------------------------------------------------------------------------


def _mellin_oracle(lam: float, m: int, z: complex, which: str) -> complex:
    # u = exp(-s) on (0, 1/2) turns the oscillation u^(i y) into cos/sin(y s);
    # (1/2, 1) carries the algebraic endpoint weight (1 - u)^(lam - 1/2)
    x, y = z.real, z.imag
    e = lam - 0.5
    if which == "alpha":
        def poly_s(s):
            u = math.exp(-s)
            return math.exp(-s * x) * kernel_poly(lam, m, u) * (1.0 - u * u) ** e

        def poly_u(u):
            return u ** (x - 1.0) * kernel_poly(lam, m, u) * (1.0 + u) ** e
    else:
        def poly_s(s):
            u = math.exp(-s)
            return math.exp(-s * (x - m)) * float(kernel_poly_reversed(lam, m, u)) * (1.0 - u * u) ** e

        def poly_u(u):
            return u ** (x - 1.0 - m) * float(kernel_poly_reversed(lam, m, u)) * (1.0 + u) ** e

    a = math.log(2.0)
    opts = dict(epsabs=1e-14, epsrel=1e-13, limit=400)
    # the integrand in s decays like exp(-rate s); stop where it is below exp(-40)
    rate = x + (m % 2) if which == "alpha" else x - m
    top = a + 40.0 / rate
    if y == 0.0:
        head = integrate.quad(poly_s, a, top, **opts)[0]
        head_i = 0.0
    else:
        head = integrate.quad(poly_s, a, top, weight="cos", wvar=abs(y), **opts)[0]
        head_i = -math.copysign(1.0, y) * integrate.quad(poly_s, a, top, weight="sin", wvar=abs(y), **opts)[0]

    def tail(part):
        def g(u):
            ph = y * math.log(u)
            return poly_u(u) * (math.cos(ph) if part == 0 else math.sin(ph))

        return integrate.quad(g, 0.5, 1.0, weight="alg", wvar=(0.0, e), **opts)[0]

    return complex(head + tail(0), head_i + tail(1))


def mellin_error(lams, ms, count: int, rng: np.random.Generator, which: str) -> float:
    """Largest ``|closed form - quadrature|`` over sampled admissible ``z``."""
    worst = 0.0
    closed = mellin_alpha if which == "alpha" else mellin_beta
    for lam in lams:
        for m in ms:
            low = -(m % 2) if which == "alpha" else m
            for _ in range(count):
                z = complex(low + rng.uniform(0.25, 5.0), rng.uniform(-3.0, 3.0))
                worst = max(worst, abs(closed(lam, m, z) - _mellin_oracle(lam, m, z, which)))
    return worst


def _orthogonality(rng) -> float:
    worst = 0.0
    for lam in (0.0, 0.25, 0.5, 1.0, 1.5):
        e = lam - 0.5
        for m in range(6):
            for k in range(m + 1, 6):
                def g(t, m=m, k=k, lam=lam):
                    return float(kernel_poly(lam, m, t) * kernel_poly(lam, k, t))

                val = integrate.quad(g, -1.0, 1.0, weight="alg", wvar=(e, e), epsabs=1e-14)[0]
                worst = max(worst, abs(val))
    return worst


def _odd_at_zero(rng) -> float:
    worst = 0.0
    for lam in (0.25, 0.5, 1.0, 1.5):
        for m in (1, 3, 5):
            worst = max(worst, abs(float(gegenbauer(lam, m, 0.0))))
    for m in (1, 3, 5):
        worst = max(worst, abs(float(chebyshev(m, 0.0))))
    # the bound |C(t)| <= c |t| (odd) on [-1, 1] with c = max |C(t)/t|
    t = np.linspace(-1.0, 1.0, 2001)
    t = t[t != 0]
    for lam in (0.25, 0.5, 1.0, 1.5):
        for m in (1, 3, 5):
            c = np.abs(gegenbauer(lam, m, t) / t)
            worst = max(worst, 0.0 if np.all(np.isfinite(c)) else math.inf)
    return worst


def _zonal_norm(rng) -> float:
    worst = 0.0
    for n in (2, 3):
        pts, wts = sphere_rule(n, 24)
        for m in range(5):
            axis = unit(rng.standard_normal(n))
            y = zonal_harmonic(n, m, axis, pts)
            worst = max(worst, abs(float((y * y) @ wts) - 1.0))
    return worst


# ---------------------------------------------------------------------------
# fracint
# ---------------------------------------------------------------------------


def _semigroup(rng) -> float:
    f = gaussian()
    ts = np.array([0.5, 1.0, 2.0])
    worst = 0.0
    for a in (0.3, 0.5, 1.0):
        for b in (0.3, 0.5, 1.0):
            inner = frac_integral_profile(FracParams(b), f)
            lhs = frac_integral(FracParams(a), inner, ts)
            rhs = frac_integral(FracParams(a + b), f, ts)
            worst = max(worst, _relmax(lhs, rhs))
    return worst


def left_inverse_cases():
    """``(FracParams, form)`` pairs exercised by the left-inverse checks."""
    cases = []
    for a in (0.5, 1.5):
        cases += [(FracParams(a, "plus", "rl"), "standard"), (FracParams(a, "minus", "rl"), "standard")]
        cases += [(FracParams(a, "plus", "ek"), "standard")]
        for form in ("standard", "moment_iii", "alt_iv"):
            cases.append((FracParams(a, "minus", "ek"), form))
    for side in ("plus", "minus"):
        for variant in ("rl", "ek"):
            cases.append((FracParams(2.0, side, variant), "integer_power"))
    cases.append((FracParams(2.0, "minus", "ek"), "alt_iv"))
    return cases


def left_inverse_error(cases=None, ts=(0.25, 1.0, 4.0), f: RadialProfile | None = None) -> float:
    """Largest relative error of ``D^alpha I^alpha f`` against ``f``."""
    f = f or rational(3)
    worst = 0.0
    for p, form in cases or left_inverse_cases():
        g = frac_integral_profile(p, f)
        got = np.array([frac_derivative(p, g, t, form) for t in ts])
        worst = max(worst, _relmax(got, f(np.asarray(ts))))
    return worst


def _conjugation_rl(rng) -> float:
    f = two_sided()
    xs = np.array([0.5, 1.0, 2.0])
    worst = 0.0
    for a in (0.5, 1.5):
        f1 = RadialProfile(lambda x, a=a: x ** (-a - 1.0) * f(1.0 / x), INF, INF)
        lhs = frac_integral(FracParams(a, "minus"), f, xs)
        rhs = xs ** (a - 1.0) * frac_integral(FracParams(a, "plus"), f1, 1.0 / xs)
        worst = max(worst, _relmax(lhs, rhs))
    return worst


def _ek_conjugated(rng) -> float:
    ts = np.array([0.5, 1.0, 2.0])
    worst = 0.0
    for a in (0.5, 1.5):
        for side in ("plus", "minus"):
            lhs = frac_integral(FracParams(a, side, "ek"), gaussian(), ts)
            rhs = frac_integral(FracParams(a, side, "rl"), exponential(), ts * ts)
            worst = max(worst, _relmax(lhs, rhs))
    return worst


def _frac_existence(rng) -> float:
    # (params, profile, finite?) on both sides of the moment thresholds
    cases = [
        (FracParams(1.5, "minus", "rl"), rational(0.5), False),
        (FracParams(1.5, "minus", "rl"), rational(1.0), True),
        (FracParams(1.0, "minus", "ek"), rational(1.0), False),
        (FracParams(1.0, "minus", "ek"), rational(1.25), True),
        (FracParams(0.5, "minus", "ek"), power(-1.0), False),
        (FracParams(0.5, "plus", "rl"), power(-1.0), False),
        (FracParams(0.5, "plus", "rl"), power(-0.5), True),
        (FracParams(0.5, "plus", "ek"), power(-2.0), False),
        (FracParams(0.5, "plus", "ek"), power(-1.5), True),
    ]
    mismatches = 0
    for p, f, finite in cases:
        ok = bool(frac_existence(p, f))
        try:
            val = frac_integral(p, f, 1.3)
            raised = False
        except DivergentIntegral:
            raised = True
        if ok != finite or raised == finite or (finite and not math.isfinite(val)):
            mismatches += 1
    return float(mismatches)


# ---------------------------------------------------------------------------
# gegchev
# ---------------------------------------------------------------------------


def kernel_annihilation_error(lams=(0.0, 0.5, 1.0), ms=(2, 3, 4, 5), ts=(0.25, 0.5, 1.0, 2.0, 4.0)) -> float:
    """Largest ``|G f_k| / int |integrand|`` over witnesses of both sides."""
    worst = 0.0
    for lam in lams:
        for m in ms:
            for k in range(m % 2, m - 1, 2):
                for side in ("minus", "plus"):
                    w = gc_kernel_witness(side, lam, m, k)
                    val, info = gc_apply(GCOperator(lam, m, side), w, np.asarray(ts), full_output=True)
                    worst = max(worst, float(np.max(np.abs(val) / info["scale"])))
    return worst


def composition_error(lams, ms, side: str, profiles, ts, enforce: bool = True) -> float:
    """Largest relative error of ``*G G f = 2^(2lam+1) I^(2lam+1) f``.

    With ``enforce=False`` the moment hypothesis is not checked, which is
    how the identity is evaluated outside its range of validity.
    """
    worst = 0.0
    ts = np.asarray(ts, dtype=float)
    for f in profiles:
        for lam in lams:
            for m in ms:
                if enforce:
                    lhs, rhs, _ = check_composition(lam, m, side, f, ts)
                else:
                    op = GCOperator(lam, m, side)
                    inner = gc_apply_profile(op, f)
                    # the inner profile vanishes to order m at 0 when the hypothesis holds;
                    # declaring that order lets the outer integral be formed regardless
                    inner = dataclasses.replace(inner, sing0=max(inner.sing0, float(m)))
                    lhs = gc_apply(op.star(), inner, ts)
                    rhs = 2.0 ** (2 * lam + 1) * frac_integral(FracParams(2 * lam + 1, side), f, ts)
                worst = max(worst, _relmax(lhs, rhs))
    return worst


def inversion_cases():
    """``(operator, profile)`` pairs for the round-trip checks."""
    g = gaussian()
    cases = [(GCOperator(lam, m, "minus"), g) for lam in (0.0, 0.5, 1.0) for m in (0, 1)]
    cases += [(GCOperator(lam, m, "minus"), g) for lam, m in ((0.5, 2), (0.0, 3), (1.0, 2))]
    cases += [(GCOperator(lam, m, "plus"), gaussian_moment(4)) for lam, m in ((0.5, 2), (0.0, 2), (1.0, 3), (0.5, 0))]
    return cases


def gc_inversion_error(cases=None, ts=(0.7, 1.0, 1.3)) -> float:
    """Largest relative error of ``gc_invert(op, op f)`` against ``f``."""
    worst = 0.0
    for op, f in cases or inversion_cases():
        g = gc_apply_profile(op, f)
        got = np.array([gc_invert(op, g, t) for t in ts])
        worst = max(worst, _relmax(got, f(np.asarray(ts))))
    return worst


def _reduction(rng) -> float:
    ts = np.array([0.5, 1.0, 2.0])
    worst = 0.0
    for lam in (0.0, 0.5, 1.0):
        for m in (0, 1):
            for star in (False, True):
                op = GCOperator(lam, m, "minus", star)
                worst = max(worst, _relmax(gc_apply(op, gaussian(), ts), gc_reduction(op, gaussian(), ts)))
    return worst


def _linearity(rng) -> float:
    f, g = gaussian_moment(6), bump(0.5, 1.5)
    a, b = rng.uniform(-2.0, 2.0, 2)
    ts = np.array([0.5, 1.0, 2.0])
    worst = 0.0
    for lam in (0.0, 0.5, 1.0):
        for m in (2, 3):
            for side in ("minus", "plus"):
                for star in (False, True):
                    op = GCOperator(lam, m, side, star)
                    lhs, info = gc_apply(op, f * a + g * b, ts, full_output=True)
                    rhs = a * gc_apply(op, f, ts) + b * gc_apply(op, g, ts)
                    worst = max(worst, float(np.max(np.abs(lhs - rhs) / info["scale"])))
    return worst


def _gc_existence(rng) -> float:
    # existence and composition hypotheses are triggered before any quadrature
    mismatches = 0
    for op, f, finite in (
        (GCOperator(0.5, 2, "minus"), rational(0.75), False),
        (GCOperator(0.5, 2, "minus"), rational(1.25), True),
        (GCOperator(0.5, 3, "minus", True), rational(1.0), False),
        (GCOperator(0.5, 3, "minus", True), rational(1.25), True),
        (GCOperator(0.5, 1, "plus"), power(-2.0), False),
        (GCOperator(0.5, 1, "plus"), power(-1.5), True),
        (GCOperator(1.0, 3, "plus", True), power(1.0), False),
        (GCOperator(1.0, 3, "plus", True), power(1.5), True),
    ):
        try:
            val = gc_apply(op, f, 1.0)
            raised = not math.isfinite(val)
        except DivergentIntegral:
            raised = True
        mismatches += (raised == finite) + (bool(gc_existence_of(op, f)) != finite)
    for lam, m, side, f, finite in (
        (0.5, 2, "minus", rational(1.0), False),
        (0.5, 2, "minus", rational(2.0), True),
        (0.5, 2, "plus", gaussian(), False),
        (0.5, 2, "plus", gaussian_moment(1), True),
    ):
        try:
            check_composition(lam, m, side, f, 1.0)
            raised = False
        except DivergentIntegral:
            raised = True
        mismatches += raised == finite
    return float(mismatches)


# ---------------------------------------------------------------------------
# radon_sh
# ---------------------------------------------------------------------------


def _generic_axis(n: int) -> np.ndarray:
    return unit(np.arange(1.0, n + 1.0))


def radon_oracle_error(ns=(2, 3), ms=range(5), profiles=None, ts=None) -> float:
    """Largest ``|brute force - profile formula|`` relative to ``max |Rf|`` per case."""
    profiles = profiles or (gaussian_moment(2), rational(3))
    ts = np.linspace(0.1, 3.0, 6) if ts is None else np.asarray(ts, dtype=float)
    worst = 0.0
    for n in ns:
        theta = unit(np.array([0.3, -0.8, 0.52][:n]))
        for m in ms:
            for u in profiles:
                h = HarmonicProfile(n, m, u, axis=_generic_axis(n))
                formula = radon_profile_forward(h, ts) * h.harmonic(theta)
                brute = np.array([radon_brute_force(n, h, HyperplaneCoord(theta, t)) for t in ts])
                worst = max(worst, float(np.max(np.abs(brute - formula)) / np.max(np.abs(formula))))
    return worst


def gaussian_closed_form_error(ns=(2, 3), ts=None) -> float:
    """``|v - pi^((n-1)/2) exp(-t^2)|`` for the radial Gaussian, by both radial routes."""
    ts = np.linspace(-3.0, 3.0, 13) if ts is None else np.asarray(ts, dtype=float)
    worst = 0.0
    for n in ns:
        exact = math.pi ** ((n - 1) / 2.0) * np.exp(-ts * ts)
        v = radon_profile_forward(HarmonicProfile(n, 0, gaussian()), ts)
        w = radon_radial(n, gaussian(), ts)
        worst = max(worst, float(np.max(np.abs(v - exact))), float(np.max(np.abs(w - exact))))
    return worst


def _parity(rng) -> float:
    ts = np.linspace(0.1, 3.0, 8)
    worst = 0.0
    for n in (2, 3):
        for m in range(5):
            h = HarmonicProfile(n, m, gaussian_moment(m))
            worst = max(worst, float(np.max(np.abs(radon_profile_forward(h, -ts) - (-1) ** m * radon_profile_forward(h, ts)))))
    return worst


def _moments(rng) -> float:
    # int_{-T}^{T} t^j v(t) dt = (1 + (-1)^(j+m)) int_0^T t^j v(t) dt
    top = 20.0
    worst = 0.0
    for n in (2, 3):
        for m in (1, 2, 3, 4):
            h = HarmonicProfile(n, m, gaussian_moment(m))
            for j in range(m):
                if (j + m) % 2:
                    continue
                val = integrate.quad(lambda t: t**j * radon_profile_forward(h, t), 0.0, top, limit=200)[0]
                mass = integrate.quad(lambda t: abs(t**j * radon_profile_forward(h, t)), 0.0, top, limit=200)[0]
                worst = max(worst, 2.0 * abs(val) / (2.0 * mass))
    return worst


def kernel_coefficients(m: int):
    """Fixed nonzero coefficients ``(k, c_k)`` over every valid ``k``."""
    return [(k, 1.0 - 0.7 * i) for i, k in enumerate(range(m % 2, m - 1, 2))]


def radon_kernel_error(ns=(2, 3), ms=(2, 3, 4), ts=None) -> float:
    """Largest scaled ``|R f|`` over kernel profiles; ``inf`` if some ``f`` vanishes."""
    ts = np.linspace(0.1, 3.0, 20) if ts is None else np.asarray(ts, dtype=float)
    worst = 0.0
    for n in ns:
        for m in ms:
            h = kernel_profile(n, m, kernel_coefficients(m), axis=_generic_axis(n))
            x = np.full((1, n), 0.7)
            if not abs(float(h(x)[0])) > 0:
                return math.inf
            val, info = gc_apply(h.operator, h.radial, ts, full_output=True)
            worst = max(worst, float(np.max(np.abs(val) / info["scale"])))
    return worst


def _dual_kernel(rng) -> float:
    rs = np.array([0.25, 0.5, 1.0, 2.0, 4.0])
    worst = 0.0
    for n in (2, 3):
        lam = (n - 2) / 2.0
        for m in (2, 3, 4):
            for k in range(m % 2, m - 1, 2):
                val, info = gc_apply(GCOperator(lam, m, "plus"), power(k), rs, full_output=True)
                u = dual_radon_profile(n, m, power(k), rs)
                worst = max(worst, float(np.max(np.abs(u) / info["scale"])), float(np.max(np.abs(val) / info["scale"])))
    return worst


def radon_round_trip_error(cases=None, rs=(0.5, 1.0, 1.5)) -> float:
    """Largest relative error of ``radon_invert_profile`` on forward profiles."""
    g = gaussian()
    cases = cases or ((2, 0, g), (3, 2, gaussian_moment(2)), (2, 3, gaussian_moment(3)), (3, 1, g), (2, 2, rational(3)))
    worst = 0.0
    for n, m, u in cases:
        v = radon_forward_profile(HarmonicProfile(n, m, u))
        got = np.array([radon_invert_profile(n, m, v, r) for r in rs])
        worst = max(worst, _relmax(got, u(np.asarray(rs))))
    return worst


def _conjugation(rng) -> float:
    worst = 0.0
    for n in (2, 3):
        ax = np.eye(n)[-1]

        def phi(th, t, n=n, ax=ax):
            t = np.asarray(t, dtype=float)
            out = np.zeros(t.shape)
            nz = t != 0
            out[nz] = np.exp(-1.0 / t[nz] ** 2 - t[nz] ** 2) * zonal_harmonic(n, 2, ax, th[nz])
            return out

        pts = [np.array([0.5, 1.2, 0.3][:n]), np.array([-1.5, 0.4, 0.9][:n])]
        c = conjugation_check("dual_from_forward", n, phi, pts)
        worst = max(worst, c.max_rel)
        f = HarmonicProfile(n, 0, bump(1.0, 2.0))
        coords = [HyperplaneCoord(unit(np.array([0.6, 0.8, 0.0][:n])), 1.3), HyperplaneCoord(np.ones(n), -0.5)]
        c = conjugation_check("forward_from_dual", n, f, coords)
        worst = max(worst, c.max_rel)
    return worst


def _dual_profile(rng) -> float:
    worst = 0.0
    for n, m, u in ((2, 1, gaussian()), (3, 2, gaussian_moment(2)), (3, 0, gaussian())):
        h = HarmonicProfile(n, m, u, axis=_generic_axis(n))
        v = radon_forward_profile(h)

        def phi(th, t, h=h):
            return radon_profile_forward(h, t) * h.harmonic(th)

        for x in (np.array([0.3, 0.4, 1.1][:n]), np.array([-0.9, 0.2, 0.5][:n])):
            r = float(np.linalg.norm(x))
            formula = dual_radon_profile(n, m, v, r) * float(h.harmonic(x / r))
            brute = dual_radon_brute_force(n, phi, x)
            worst = max(worst, abs(formula - brute) / max(abs(brute), 1e-300))
    return worst


def radon_support_error() -> float:
    """Scans for ``R`` and ``R*`` on bumps, and the kernel-profile counterexample.

    Returns the largest transform value on the predicted vanishing region;
    ``inf`` if the counterexample function vanishes where it must not.
    """
    worst = 0.0
    for n in (2, 3):
        for m in (0, 1, 2):
            h = HarmonicProfile(n, m, bump(0.2, 1.0))
            worst = max(worst, support_scan(h, 1.0))
            u = dual_radon_profile(n, m, bump(1.0, 2.0), np.linspace(0.05, 0.95, 10))
            worst = max(worst, float(np.max(np.abs(u))))
        k = kernel_profile(n, 4, [(0, 1.0), (2, -3.0)])
        worst = max(worst, support_scan(k, 0.5))
        x = np.full((1, n), 2.0)
        if not abs(float(k(x)[0])) > 0:
            return math.inf
    return worst


def _radon_existence(rng) -> float:
    mismatches = 0
    for n, m, u, finite in (
        (2, 0, rational(0.5), False),
        (2, 0, rational(0.75), True),
        (3, 0, rational(1.0), False),
        (3, 2, rational(1.25), True),
        (3, 3, power(-3.5), True),
    ):
        try:
            radon_profile_forward(HarmonicProfile(n, m, u), 1.3)
            raised = False
        except DivergentIntegral:
            raised = True
        mismatches += raised == finite
    for n, m, v, finite in ((2, 2, power(-1.0), False), (3, 1, power(-0.5), True)):
        try:
            dual_radon_profile(n, m, v, 1.3)
            raised = False
        except DivergentIntegral:
            raised = True
        mismatches += raised == finite
    return float(mismatches)


# ---------------------------------------------------------------------------
# projective
# ---------------------------------------------------------------------------

TRANSFORMS = ("sphere_mean", "funk", "slice", "hyperbolic", "hyperbolic_dual")


def path_grid(which: str, n: int, count: int = 20, rng: np.random.Generator | None = None):
    """Test function, coordinate list and evaluator for path-agreement sweeps.

    The evaluator is ``evaluate(coord, path) -> float``.
    """
    rng = rng or np.random.default_rng(0)
    axis = _generic_axis(n)
    dirs = _directions(n, count)
    frac = (np.arange(count) + 0.5) / count
    if which == "sphere_mean":
        f = HarmonicProfile(n, 2, gaussian(), axis=axis)
        coords = [d * (0.2 + 1.8 * q) for d, q in zip(dirs, frac)]
        return f, coords, lambda x, path: sphere_mean_forward(n, f, x, path)
    if which == "funk":
        f = ChartProfile("funk", HarmonicProfile(n, 2, rational(n / 2.0 + 1.0), axis=axis))
        coords = list(unit(rng.standard_normal((count, n + 1))))
        return f, coords, lambda om, path: funk_forward(n, f, om, path)
    if which == "slice":
        f = ChartProfile("slice", HarmonicProfile(n, 1, gaussian(), axis=axis))
        coords = [(d, 0.2 + (0.5 * np.pi - 0.2) * q) for d, q in zip(dirs, frac)]
        return f, coords, lambda c, path: slice_forward(n, f, c[0], c[1], path)
    if which == "hyperbolic":
        f = ChartProfile("hyperbolic", HarmonicProfile(n, 2, bump(0.1, 0.9), axis=axis))
        coords = [GeodesicSphereCoord.hyperbolic(d, -1.2 + 2.4 * q) for d, q in zip(dirs, frac)]
        return f, coords, lambda xi, path: hyperbolic_forward(n, f, xi, path)
    if which == "hyperbolic_dual":
        f = HyperbolicDualProfile(n, 2, gaussian(), axis=axis)
        coords = [hyperbolic_point(d, 0.1 + 1.4 * q) for d, q in zip(dirs, frac)]
        return f, coords, lambda x, path: hyperbolic_dual(n, f, x, path)
    raise ValueError(f"unknown transform {which!r}; expected one of {TRANSFORMS}")


def path_agreement_error(which: str, ns=(2, 3), count: int = 20, rng=None) -> float:
    """Largest ``|other path - direct|`` relative to ``max |direct|`` on the grid."""
    worst = 0.0
    paths = _PATHS[which]
    for n in ns:
        _, coords, evaluate = path_grid(which, n, count, rng)
        table = np.array([[evaluate(c, p) for p in paths] for c in coords])
        scale = float(np.max(np.abs(table[:, 0])))
        worst = max(worst, float(np.max(np.abs(table[:, 1:] - table[:, :1]))) / scale)
    return worst


def _round_trips(rng) -> float:
    worst = 0.0
    for n in (2, 3):
        x = rng.standard_normal((100, n))
        for kind in ("sphere_mean_AB", "funk_mu", "slice_nu"):
            m = ProjectiveMap(kind, n)
            worst = max(worst, float(np.max(np.abs(m.inverse(m.forward(x)) - x))))
        y = unit(rng.standard_normal((100, n))) * rng.uniform(0.0, 0.99, (100, 1))
        m = ProjectiveMap("hyperbolic_gnomonic", n)
        worst = max(worst, float(np.max(np.abs(m.forward(m.inverse(y)) - y))))
    return worst


def measure_error(which=MEASURE_IDENTITIES, ns=(2, 3)) -> float:
    """Largest relative disagreement over the change-of-variables identities."""
    return max(measure_transfer_check(w, n).max_rel for w in which for n in ns)


def _abs_of(f):
    return lambda p: np.abs(f(p))


def projective_kernel_error(which: str, ns=(2, 3), ms=(2, 3, 4), count: int = 6, rng=None) -> float:
    """Largest ``|T f| / T|f|`` over kernel profiles on a coordinate scan."""
    rng = rng or np.random.default_rng(0)
    worst = 0.0
    for n in ns:
        dirs = _directions(n, count)
        frac = (np.arange(count) + 0.5) / count
        for m in ms:
            cs = kernel_coefficients(m)
            if which == "funk":
                k = funk_kernel_profile(n, m, cs)
                pairs = [(funk_forward(n, k, om), funk_forward(n, _abs_of(k), om))
                         for om in unit(rng.standard_normal((count, n + 1)))]
            elif which == "slice":
                k = slice_kernel_profile(n, m, cs)
                pairs = [(slice_forward(n, k, d, 0.2 + 1.3 * q), slice_forward(n, _abs_of(k), d, 0.2 + 1.3 * q))
                         for d, q in zip(dirs, frac)]
            elif which == "sphere_mean":
                k = sphere_mean_kernel_profile(n, m, cs)
                pairs = [(sphere_mean_forward(n, k, d * (0.2 + 2.0 * q)), sphere_mean_forward(n, _abs_of(k), d * (0.2 + 2.0 * q)))
                         for d, q in zip(dirs, frac)]
            elif which == "hyperbolic":
                k = hyperbolic_kernel_profile(n, m, cs)
                coords = [GeodesicSphereCoord.hyperbolic(d, 0.1 + 1.2 * q) for d, q in zip(dirs, frac)]
                pairs = [(hyperbolic_forward(n, k, xi), hyperbolic_forward(n, _abs_of(k), xi)) for xi in coords]
            else:
                raise ValueError(f"unknown transform {which!r}")
            worst = max(worst, max(abs(a) / b for a, b in pairs))
    return worst


def _sphere_mean_kernel_as_stated(rng) -> float:
    # u(r) = r^k with m - k even, k <= m - 2, in dimension 3
    worst = 0.0
    for m, k in ((2, 0), (3, 1), (4, 2)):
        h = HarmonicProfile(3, m, power(k))
        for x in (np.array([0.3, 0.4, 0.5]), np.array([-0.8, 0.1, 0.6])):
            worst = max(worst, abs(sphere_mean_forward(3, h, x)) / sphere_mean_forward(3, _abs_of(h), x))
    return worst


def _funk_odd(rng) -> float:
    worst = 0.0
    for n in (2, 3):
        c = rng.standard_normal(n + 1)

        def odd(p, c=c):
            return 0.5 * (np.exp(p @ c) - np.exp(-(p @ c)))

        for om in unit(rng.standard_normal((10, n + 1))):
            worst = max(worst, abs(funk_forward(n, odd, om)))
    return worst


def _projective_existence(rng) -> float:
    mismatches = 0
    for n in (2, 3):
        attempts = (
            (lambda: funk_forward(n, ChartProfile("funk", HarmonicProfile(n, 0, power(1.0 - n))), np.eye(n + 1)[0]), False),
            (lambda: funk_forward(n, ChartProfile("funk", HarmonicProfile(n, 0, rational(n / 2.0))), np.eye(n + 1)[0]), True),
            (lambda: slice_forward(n, ChartProfile("slice", HarmonicProfile(n, 0, rational(0.5 * (n - 1)))), np.eye(n)[0], 0.5), False),
            (lambda: slice_forward(n, ChartProfile("slice", HarmonicProfile(n, 0, gaussian())), np.eye(n)[0], 0.5), True),
            (lambda: sphere_mean_forward(n, HarmonicProfile(n, 2, power(1.0 - n)), np.full(n, 0.5)), False),
            (lambda: sphere_mean_forward(n, HarmonicProfile(n, 2, power(1.5 - n)), np.full(n, 0.5)), True),
            (lambda: ChartProfile("hyperbolic", HarmonicProfile(n, 0, gaussian())), False),
            (lambda: ChartProfile("hyperbolic", HarmonicProfile(n, 0, bump(0.0, 1.0))), True),
        )
        for attempt, finite in attempts:
            try:
                attempt()
                raised = False
            except (DivergentIntegral, ValueError):
                raised = True
            mismatches += raised == finite
    return float(mismatches)


def slice_constant_error(psis=None) -> float:
    """``|S 1 - 2 pi sin psi|`` on S^2."""
    psis = np.linspace(0.1, 0.5 * np.pi, 9) if psis is None else psis
    one = lambda p: np.ones(len(p))  # noqa: E731
    return max(abs(slice_forward(2, one, [1.0, 0.0], psi) - 2.0 * np.pi * np.sin(psi)) for psi in psis)


def slice_zonal_error(ns=(2, 3), psis=(0.3, np.pi / 4, 1.2)) -> float:
    """Relative gap between the zonal closed form and direct slice quadrature."""
    f0 = RadialProfile(lambda r: np.exp(-r * r) * (1.0 + r * r), 0.0, INF)
    worst = 0.0
    for n in ns:
        def fz(eta):
            d = 1.0 - eta[:, -1]
            return f0(np.linalg.norm(eta[:, :-1] / d[:, None], axis=-1))

        for psi in psis:
            closed = slice_zonal_forward(n, f0, 1.0 / math.tan(psi))
            direct = slice_forward(n, fz, np.eye(n)[0], psi)
            worst = max(worst, abs(closed - direct) / abs(direct))
    return worst


def hyperbolic_chord_error(b: float = 0.7, tanhs=(0.0, 0.3, 0.6)) -> float:
    """Relative gap to ``2 sqrt(b^2 - tanh^2 rho)/ch rho`` for the chart indicator of ``|y| <= b``."""
    def f(x):
        y = x[:, :-1] / x[:, -1:]
        return np.where(np.linalg.norm(y, axis=-1) <= b, 1.0, 0.0) / x[:, -1] ** 2

    worst = 0.0
    for s in tanhs:
        rho = math.atanh(s)
        exact = 2.0 * math.sqrt(b * b - s * s) / math.cosh(rho)
        xi = GeodesicSphereCoord.hyperbolic([0.6, 0.8], rho)
        got = hyperbolic_forward(2, f, xi, breaks=(b,))
        worst = max(worst, abs(got - exact) / exact)
    return worst


def projective_inversion_error() -> float:
    """Relative round-trip errors of the ``Q`` and slice inversions."""
    worst = 0.0
    for n, m in ((2, 0), (2, 1), (3, 2)):
        h = HarmonicProfile(n, m, gaussian())
        w = sphere_mean_profile(h)
        for r in (0.5, 1.2):
            worst = max(worst, abs(sphere_mean_invert_profile(n, m, w, r) - math.exp(-r * r)) / math.exp(-r * r))
    for n, m in ((2, 0), (2, 2), (3, 1)):
        p = ChartProfile("slice", HarmonicProfile(n, m, gaussian()))
        data = slice_profile(p)
        for eta in (unit(np.array([0.3, -0.5, 0.2, 0.4][: n + 1])), unit(np.array([-0.6, 0.2, 0.1, -0.3][: n + 1]))):
            exact = float(p(eta[None])[0])
            worst = max(worst, abs(slice_invert_profile(n, m, data, eta) - exact) / abs(exact))
    return worst


def _cap_bump(lo: float, hi: float, absolute: bool):
    def f(p):
        z = np.abs(p[:, -1]) if absolute else p[:, -1]
        x = (z - lo) / (hi - lo)
        ok = (x > 0) & (x < 1)
        xs = np.where(ok, x, 0.5)
        return np.where(ok, np.exp(4.0 - 1.0 / (xs * (1.0 - xs))), 0.0)

    return f


def projective_support_error() -> float:
    """Largest transform value on the vanishing regions of the support theorems."""
    worst = 0.0
    for n in (2, 3):
        worst = max(worst, support_scan_projective("funk", n, _cap_bump(0.8, 1.0, True), 0.8))
        worst = max(worst, support_scan_projective("slice", n, _cap_bump(-0.5, 0.4, False), 0.5))
        worst = max(worst, support_scan_projective("sphere_mean", n, HarmonicProfile(n, 1, bump(1.0, 2.0)), 0.5))
        p = ChartProfile("hyperbolic", HarmonicProfile(n, 2, bump(0.0, 0.3)))
        worst = max(worst, support_scan_projective("hyperbolic", n, p, math.atanh(0.3)))
    return worst


def composition_stated_plus_error() -> float:
    """Plus-side composition on the Gaussian and ``(1+s^2)^-4``; ``inf`` when it diverges."""
    try:
        return composition_error((0.0, 0.5, 1.0), (2, 3, 4), "plus", (gaussian(), rational(4)), COMPOSITION_TS, enforce=False)
    except GCRadonError:
        return math.inf


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------

COMPOSITION_TS = np.geomspace(0.25, 4.0, 9)
LAMBDAS = (0.0, 0.25, 0.5, 1.0, 1.5)


def _fixed(fn, *args, **kwargs):
    # registry entries without randomness ignore the generator
    return lambda rng: fn(*args, **kwargs)


CHECKS = (
    Check("specfun.mellin_alpha", ("89zse", "89zse55", "89zset"), 1e-8,
          lambda rng: mellin_error(LAMBDAS, range(7), 8, rng, "alpha"),
          "closed form vs quadrature, 8 random z per (lambda, m), absolute"),
    Check("specfun.mellin_beta", ("89zse1", "89zse1t"), 1e-8,
          lambda rng: mellin_error(LAMBDAS, range(7), 8, rng, "beta"),
          "closed form vs quadrature, 8 random z per (lambda, m), absolute"),
    Check("specfun.orthogonality", ("gegenbauer-orthogonality",), 1e-9, _orthogonality,
          "weighted inner products of distinct degrees <= 5, absolute"),
    Check("specfun.odd_degree", ("kioxsru",), 1e-14, _odd_at_zero,
          "odd-degree polynomials vanish at 0 and |C(t)/t| stays bounded"),
    Check("specfun.zonal_norm", ("Funk-Hecke",), 1e-6, _zonal_norm,
          "|int Y_m^2 - 1| on S^1 and S^2, m <= 4"),
    Check("fracint.semigroup", ("RL-semigroup",), 1e-6, _semigroup,
          "I^a I^b f vs I^(a+b) f, relative"),
    Check("fracint.left_inverse", ("78awqe", "frr+", "frr+z"), 1e-4, _fixed(left_inverse_error),
          "D^a I^a f vs f over every applicable derivative form, relative"),
    Check("fracint.conjugation", ("zhuhjtf",), 1e-7, _conjugation_rl,
          "minus side through the plus side at reciprocal arguments, relative"),
    Check("fracint.ek_from_rl", ("EKO",), 1e-7, _ek_conjugated,
          "Erdelyi-Kober integrals as Riemann-Liouville integrals in t^2, relative"),
    Check("fracint.existence", ("lif", "lifa2"), 1.0, _frac_existence,
          "number of cases where the predicate and the integrator disagree"),
    Check("gegchev.kernel", ("89srg", "marti"), 1e-8, _fixed(kernel_annihilation_error),
          "|G f_k| / int |integrand| for every witness, both sides"),
    Check("gegchev.inversion", ("mlpzx", "mlpzxle", "4gt6a8", "4gt6a9"), 1e-4, _fixed(gc_inversion_error),
          "round trips through gc_invert, relative"),
    Check("gegchev.composition_minus", ("89n6g", "8vcmk", "8vcmkt"), 1e-6,
          _fixed(composition_error, (0.0, 0.5, 1.0), (2, 3, 4), "minus", (gaussian(), rational(4)), COMPOSITION_TS),
          "right-sided composition on exp(-s^2) and (1+s^2)^-4, relative"),
    Check("gegchev.composition_plus", ("89n6gle", "8vcmkle", "8vcmktle"), 1e-6,
          _fixed(composition_error, (0.0, 0.5, 1.0), (2, 3, 4), "plus", (bump(0.5, 1.5), gaussian_moment(4)), COMPOSITION_TS),
          "left-sided composition on profiles meeting its moment hypothesis, relative"),
    Check("gegchev.composition_plus_gaussian", ("8vcmkle", "8vcmktle"), 1e-6, _fixed(composition_stated_plus_error),
          "left-sided composition on exp(-s^2) and (1+s^2)^-4, outside its hypothesis",
          expect="conflict"),
    Check("gegchev.reduction", ("4gt6a8", "4gt6a9", "4gt6a8Ch", "4gt6a9Ch"), 1e-10, _reduction,
          "m in {0, 1} against the Erdelyi-Kober reductions, relative"),
    Check("gegchev.linearity", ("4gt6a", "4gt6a1", "4gt6at", "4gt6a1t", "4gt6ale", "4gt6a1le", "4gt6atle", "4gt6a1tle"),
          1e-10, _linearity, "all eight operators, scaled by int |integrand|"),
    Check("gegchev.existence", ("lo8xw", "lo8xwADD"), 1.0, _gc_existence,
          "number of cases where the predicates and the integrators disagree"),
    Check("radon_sh.oracle", ("rtra1", "hpplz3", "ppo9j", "Funk-Hecke"), 1e-6, _fixed(radon_oracle_error),
          "profile formula vs brute-force hyperplane integrals, relative to max |Rf|"),
    Check("radon_sh.gaussian", ("rese",), 1e-8, _fixed(gaussian_closed_form_error),
          "pi^((n-1)/2) exp(-t^2) by the harmonic and the radial routes, absolute"),
    Check("radon_sh.parity", ("ppo9j",), 1e-14, _parity, "|v(-t) - (-1)^m v(t)|"),
    Check("radon_sh.moments", ("poxe1", "ppo9j"), 1e-6, _moments,
          "|int_{-20}^{20} t^j v| / int |t^j v| for j < m"),
    Check("radon_sh.kernel", ("azw1a2", "zaehle4RA", "azw2INTRO"), 1e-8, _fixed(radon_kernel_error),
          "scaled |Rf| of kernel profiles (inf if f vanishes)"),
    Check("radon_sh.dual_kernel", ("zaeh", "zaehle4"), 1e-8, _dual_kernel,
          "scaled |R* phi| for phi = t^k Y_m"),
    Check("radon_sh.round_trip", ("recon65", "012aq", "012aq2"), 1e-4, _fixed(radon_round_trip_error),
          "inverse of forward profiles, relative"),
    Check("radon_sh.conjugation", ("iozesf", "jikbVF", "jikb", "jikbBU"), 1e-5, _conjugation,
          "R and R* through the reflections A and B, brute force both sides, relative"),
    Check("radon_sh.dual", ("durt", "ppo9q"), 1e-5, _dual_profile,
          "dual profile formula vs sphere quadrature, relative"),
    Check("radon_sh.support", ("azw1a2R", "azw1a2R2", "his impl"), 1e-9, _fixed(radon_support_error),
          "transforms on the vanishing regions; the kernel counterexample must not vanish"),
    Check("radon_sh.existence", ("byvs1",), 1.0, _radon_existence,
          "number of cases where the predicates and the integrators disagree"),
    Check("projective.paths.sphere_mean", ("Corma", "CormaQ", "Corma2", "Corma2a"), 1e-5,
          lambda rng: path_agreement_error("sphere_mean", rng=rng), "all paths vs direct, relative to max |Qf|"),
    Check("projective.paths.funk", ("Con22on", "Con22on1", "Con22on2", "Con22on22"), 1e-5,
          lambda rng: path_agreement_error("funk", rng=rng), "all paths vs direct, relative to max |Ff|"),
    Check("projective.paths.slice", ("MUIT", "stereoviatS", "stereogr1r3"), 1e-5,
          lambda rng: path_agreement_error("slice", rng=rng), "all paths vs direct, relative to max |Sf|"),
    Check("projective.paths.hyperbolic", ("mmqAAWS", "3.6-HYP", "3.14-HYP"), 1e-5,
          lambda rng: path_agreement_error("hyperbolic", rng=rng), "all paths vs direct, relative to max |Rf|"),
    Check("projective.paths.hyperbolic_dual", ("3.15-HYP",), 1e-5,
          lambda rng: path_agreement_error("hyperbolic_dual", rng=rng), "all paths vs direct, relative to max |R* phi|"),
    Check("projective.round_trips", ("MUIT", "mmqAAWS", "Con22on"), 1e-12, _round_trips,
          "inverse(forward(p)) - p on 100 random points per map, absolute"),
    Check("projective.measure", ("teq1", "teq2", "viat", "hvar", "stslice", "stslice1", "stereoviat", "hvaRFr",
                                 "iKOOUY", "3.A6-HYP", "duas3"), 1e-6, _fixed(measure_error),
          "both sides of each change-of-variables identity, relative"),
    Check("projective.kernel.funk", ("786NGR1SP",), 1e-7, lambda rng: projective_kernel_error("funk", rng=rng),
          "|Ff| / F|f| for kernel profiles"),
    Check("projective.kernel.slice", ("zasliep", "zNYUep"), 1e-7, lambda rng: projective_kernel_error("slice", rng=rng),
          "|Sf| / S|f| for kernel profiles"),
    Check("projective.kernel.sphere_mean", ("zaehQuin", "azw2INTROQ"), 1e-7,
          lambda rng: projective_kernel_error("sphere_mean", rng=rng),
          "|Qf| / Q|f| for u = sum c_k r^(k+2-n)"),
    Check("projective.kernel.sphere_mean_rk", ("zaehQuin", "azw2INTROQ"), 1e-7, _sphere_mean_kernel_as_stated,
          "|Qf| / Q|f| for u = r^k in dimension 3", expect="conflict"),
    Check("projective.kernel.hyperbolic", ("786NGR1", "azw2INHY5"), 1e-7,
          lambda rng: projective_kernel_error("hyperbolic", ms=(2, 3), count=3, rng=rng),
          "|Rf| / R|f| for u = sum c_k coth^k r on the hyperboloid", expect="conflict"),
    Check("projective.funk_odd", ("786NGR1SP",), 1e-9, _funk_odd, "|F f_odd| for random odd exponentials"),
    Check("projective.existence", ("byvs1SPH", "llyinteg", "stereoscp2", "HYYscp2"), 1.0, _projective_existence,
          "number of cases where the predicates do not fire as declared"),
    Check("projective.slice_constant", ("Sliceint1",), 1e-7, _fixed(slice_constant_error),
          "|S1 - 2 pi sin psi| on S^2"),
    Check("projective.slice_zonal", ("stereoscp2",), 1e-6, _fixed(slice_zonal_error),
          "zonal closed form vs direct quadrature, relative"),
    Check("projective.hyperbolic_chord", ("3.14-HYP",), 1e-6, _fixed(hyperbolic_chord_error),
          "chord length formula on H^2, relative"),
    Check("projective.inversion", ("llyinteg1", "llhericeg1"), 1e-4, _fixed(projective_inversion_error),
          "Q and slice inversions on Gaussian profiles, relative"),
    Check("projective.support", ("SPHSup", "zasli", "zaehQusu", "786NGR"), 1e-9, _fixed(projective_support_error),
          "transforms on the vanishing regions of the support theorems"),
)

_BY_ID = {c.id: c for c in CHECKS}


def select_checks(patterns=None) -> list[Check]:
    """Checks whose id matches one of ``patterns`` (prefix or shell glob)."""
    if not patterns:
        return list(CHECKS)
    if isinstance(patterns, str):
        patterns = [p for p in patterns.split(",") if p]
    return [c for c in CHECKS if any(c.id.startswith(p) or fnmatch(c.id, p) for p in patterns)]


def _status(check: Check, err: float, tol: float) -> str:
    holds = err < tol
    if check.expect == "conflict":
        return "unexpected_pass" if holds else "conflict"
    return "pass" if holds else "fail"


def run_check(check_id: str, seed: int = 0, tol: float | None = None) -> CheckResult:
    """Run one registered check; exceptions become ``error`` records."""
    check = _BY_ID[check_id]
    tol = check.tol if tol is None else float(tol)
    start = time.perf_counter()
    message = ""
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        try:
            err = float(check.fn(_rng(seed, check.id)))
            status = _status(check, err, tol)
        except Exception as exc:  # failures are report entries, not crashes
            err, status, message = math.nan, "error", f"{type(exc).__name__}: {exc}"
    if status == "conflict" and not message:
        message = "documented conflict: the identity does not hold as stated"
    ms = 1000.0 * (time.perf_counter() - start)
    return CheckResult(check.id, check.anchor, status, err, tol, round(ms, 1), message)


def run_checks(checks=None, seed: int = 0, tol: float | None = None, jobs: int = 1) -> list[CheckResult]:
    """Run ``checks`` in a pool of ``jobs`` worker processes; results keep registry order."""
    ids = [c.id for c in (CHECKS if checks is None else checks)]
    if jobs <= 1 or len(ids) <= 1:
        return [run_check(i, seed, tol) for i in ids]
    with ProcessPoolExecutor(max_workers=int(jobs)) as pool:
        return list(pool.map(run_check, ids, [seed] * len(ids), [tol] * len(ids)))


def anchor_coverage(results) -> list[str]:
    """Required anchors missing from the anchors of ``results``."""
    seen = set()
    for r in results:
        seen.update(a for a in r.anchor.split(","))
    return [a for a in REQUIRED_ANCHORS if a not in seen]
