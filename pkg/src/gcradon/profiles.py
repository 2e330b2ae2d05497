"""Radial profiles on (0, inf) and the textual profile grammar.

A :class:`RadialProfile` is a vectorized function together with the power
behaviour the integrators rely on:

* ``sing0``  -- ``f(r) = O(r**sing0)`` as ``r -> 0``,
* ``decay``  -- ``f(r) = O(r**-decay)`` as ``r -> inf``.

``math.inf`` means "vanishes faster than any power" (Gaussian tails, compact
support, flat behaviour at the origin).  When an exponent is finite the
quadrature also assumes that ``f(r) r**-sing0`` is smooth in ``r`` near 0 and
``f(r) r**decay`` is smooth in ``1/r`` near infinity, which is true for every
builder below.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import ParseError

__all__ = [
    "RadialProfile",
    "bump",
    "constant",
    "exponential",
    "format_profile",
    "gaussian",
    "gaussian_moment",
    "indicator",
    "parse_profile",
    "power",
    "rational",
    "two_sided",
    "zero",
]

INF = math.inf


@dataclass(frozen=True)
class RadialProfile:
    """Evaluable real function on ``(0, inf)`` with declared exponents.

    Parameters
    ----------
    func : callable
        Vectorized evaluator ``r -> f(r)``.
    sing0 : float
        Exponent at the origin, ``f(r) = O(r**sing0)``.
    decay : float
        Exponent at infinity, ``f(r) = O(r**-decay)``.
    label : str
        Canonical textual form (see :func:`parse_profile`).
    support : tuple of float
        Closed interval outside of which ``f`` vanishes.
    breaks : tuple of float
        Radii where ``f`` is not smooth; quadrature panels are cut there.
    """

    func: Callable[[np.ndarray], np.ndarray] = field(repr=False)
    sing0: float = 0.0
    decay: float = INF
    label: str = ""
    support: tuple = (0.0, INF)
    breaks: tuple = ()

    def __call__(self, r):
        r = np.asarray(r, dtype=float)
        out = np.asarray(self.func(r), dtype=float)
        return np.broadcast_to(out, r.shape).copy() if out.shape != r.shape else out

    @property
    def start_power(self) -> float:
        """Jacobi exponent used for the behaviour at the origin."""
        return self.sing0 if math.isfinite(self.sing0) else 0.0

    @property
    def tail_power(self) -> float:
        """Jacobi exponent used for the behaviour at infinity."""
        return self.decay if math.isfinite(self.decay) else 0.0

    @property
    def has_breaks(self) -> bool:
        return bool(self.breaks) or self.support != (0.0, INF)

    @property
    def is_zero(self) -> bool:
        return self.support[0] >= self.support[1]

    def __add__(self, other: "RadialProfile") -> "RadialProfile":
        if not isinstance(other, RadialProfile):
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        f, g = self.func, other.func
        label = f"{self.label}+{other.label}" if self.label and other.label else ""
        return RadialProfile(
            lambda r: f(r) + g(r),
            sing0=min(self.sing0, other.sing0),
            decay=min(self.decay, other.decay),
            label=label,
            support=(min(self.support[0], other.support[0]), max(self.support[1], other.support[1])),
            breaks=_merge_breaks(self, other),
        )

    def __mul__(self, c: float) -> "RadialProfile":
        c = float(c)
        if c == 0.0:
            return zero()
        f = self.func
        label = self.label if c == 1.0 else f"{_fmt(c)}*{self.label}" if self.label else ""
        return RadialProfile(
            lambda r: c * f(r), self.sing0, self.decay, label, self.support, self.breaks
        )

    __rmul__ = __mul__

    def __neg__(self) -> "RadialProfile":
        return self * -1.0

    def __sub__(self, other: "RadialProfile") -> "RadialProfile":
        return self + (-other)

    def times_power(self, p: float, label: str = "") -> "RadialProfile":
        """The profile ``r**p f(r)``."""
        f = self.func
        return RadialProfile(
            lambda r: r**p * f(r),
            self.sing0 + p,
            self.decay - p,
            label,
            self.support,
            self.breaks,
        )


def _merge_breaks(a: RadialProfile, b: RadialProfile) -> tuple:
    pts = set(a.breaks) | set(b.breaks)
    for s in (a.support, b.support):
        pts.update(x for x in s if 0.0 < x < INF)
    return tuple(sorted(pts))


def _fmt(x: float) -> str:
    x = float(x)
    if x == int(x) and abs(x) < 1e15:
        return str(int(x))
    return repr(x)


def zero() -> RadialProfile:
    """The zero profile."""
    return RadialProfile(lambda r: np.zeros_like(r), INF, INF, "zero", (0.0, 0.0))


def constant(c: float = 1.0) -> RadialProfile:
    """Constant profile (no decay)."""
    c = float(c)
    return RadialProfile(lambda r: np.full_like(r, c), 0.0, 0.0, f"power(0)" if c == 1 else f"{_fmt(c)}*power(0)")


def gaussian() -> RadialProfile:
    """``exp(-r**2)``."""
    return RadialProfile(lambda r: np.exp(-r * r), 0.0, INF, "gaussian")


def gaussian_moment(j: int) -> RadialProfile:
    """``r**j exp(-r**2)``."""
    return RadialProfile(lambda r: r**j * np.exp(-r * r), float(j), INF, f"gaussian_moment({j})")


def exponential() -> RadialProfile:
    """``exp(-r)``."""
    return RadialProfile(lambda r: np.exp(-r), 0.0, INF, "exponential")


def two_sided() -> RadialProfile:
    """``exp(-1/r) exp(-r)``: flat at the origin and at infinity."""

    def f(r):
        with np.errstate(divide="ignore", over="ignore"):
            return np.where(r > 0, np.exp(-1.0 / np.maximum(r, 1e-300) - r), 0.0)

    return RadialProfile(f, INF, INF, "two_sided")


def power(p: float) -> RadialProfile:
    """Pure power ``r**p``."""
    p = float(p)
    return RadialProfile(lambda r: r**p, p, -p, f"power({_fmt(p)})")


def rational(k: float) -> RadialProfile:
    """``(1 + r**2)**-k``."""
    k = float(k)
    return RadialProfile(lambda r: (1.0 + r * r) ** -k, 0.0, 2.0 * k, f"rational({_fmt(k)})")


def bump(a: float, b: float) -> RadialProfile:
    """Smooth bump supported on ``[a, b]`` with peak value 1.

    ``exp(4 - 1/(x(1-x)))`` with ``x = (r-a)/(b-a)``.
    """
    a, b = float(a), float(b)
    if not (0.0 <= a < b < INF):
        raise ValueError(f"bump needs 0 <= a < b < inf, got ({a}, {b})")

    def f(r):
        x = (r - a) / (b - a)
        inside = (x > 0) & (x < 1)
        xs = np.where(inside, x, 0.5)
        return np.where(inside, np.exp(4.0 - 1.0 / (xs * (1.0 - xs))), 0.0)

    return RadialProfile(f, INF, INF, f"bump({_fmt(a)},{_fmt(b)})", (a, b))


def indicator(a: float) -> RadialProfile:
    """Indicator of ``r <= a``."""
    a = float(a)
    if not a > 0:
        raise ValueError("indicator radius must be positive")
    return RadialProfile(lambda r: np.where(r <= a, 1.0, 0.0), 0.0, INF, f"indicator({_fmt(a)})", (0.0, a))


# ---------------------------------------------------------------------------
# Textual grammar
#
#   spec   := term ('+' term)*
#   term   := [number '*'] name ['(' number (',' number)* ')']
# ---------------------------------------------------------------------------

_BUILDERS = {
    "gaussian": (gaussian, 0),
    "exponential": (exponential, 0),
    "two_sided": (two_sided, 0),
    "zero": (zero, 0),
    "power": (power, 1),
    "rational": (rational, 1),
    "gaussian_moment": (lambda j: gaussian_moment(int(j)), 1),
    "bump": (bump, 2),
    "indicator": (indicator, 1),
    "kernel_witness": (None, 4),
}

_TOKEN = re.compile(r"\s*(?:(?P<num>[-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?)|(?P<name>[a-z_]+)|(?P<sym>[()*,+]))")
_NUMBER_ONLY = re.compile(r"[-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?")


def _kernel_witness(side, lam, m, k):
    from .gegchev import gc_kernel_witness

    sides = {0: "minus", 1: "plus"}
    if side not in sides:
        raise ValueError("kernel_witness side must be 0 (minus) or 1 (plus)")
    return gc_kernel_witness(sides[int(side)], lam, int(m), int(k))


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _peek(self):
        m = _TOKEN.match(self.text, self.pos)
        if not m or m.end() == m.start():
            return None, None, self.pos
        kind = m.lastgroup
        return kind, m.group(kind), m.end()

    def _expect(self, sym):
        kind, val, end = self._peek()
        if kind != "sym" or val != sym:
            raise ParseError(f"unexpected {val!r}" if val else "unexpected end of input", self._here(), (sym,))
        self.pos = end

    def _here(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.pos

    def _number(self):
        here = self._here()
        m = _NUMBER_ONLY.match(self.text, here)
        if not m:
            raise ParseError("expected a number", here, ("number",))
        self.pos = m.end()
        return float(m.group())

    def parse(self) -> RadialProfile:
        if not self.text.strip():
            raise ParseError("empty profile specification", 0, tuple(_BUILDERS))
        prof = self._term()
        while self._here() < len(self.text):
            if self.text[self.pos] != "+":
                raise ParseError(f"unexpected {self.text[self.pos]!r}", self.pos, ("+", "end of input"))
            self.pos += 1
            prof = prof + self._term()
        if self._here() != len(self.text):
            raise ParseError("trailing characters", self._here(), ("+", "end of input"))
        return prof

    def _term(self) -> RadialProfile:
        coeff = 1.0
        kind, val, end = self._peek()
        if kind == "num":
            coeff = self._number()
            self._expect("*")
            kind, val, end = self._peek()
        if kind != "name" or val not in _BUILDERS:
            raise ParseError(
                f"unknown profile {val!r}" if val else "missing profile name",
                self._here(),
                tuple(sorted(_BUILDERS)),
            )
        self.pos = end
        builder, arity = _BUILDERS[val]
        args = []
        if arity:
            self._expect("(")
            args.append(self._number())
            for _ in range(arity - 1):
                self._expect(",")
                args.append(self._number())
            self._expect(")")
        if val == "kernel_witness":
            builder = _kernel_witness
        try:
            prof = builder(*args)
        except ValueError as exc:
            raise ParseError(str(exc), self.pos) from None
        if val == "kernel_witness":
            prof = RadialProfile(
                prof.func, prof.sing0, prof.decay, "kernel_witness(" + ",".join(_fmt(a) for a in args) + ")",
                prof.support, prof.breaks,
            )
        return prof * coeff if coeff != 1.0 else prof


def parse_profile(spec: str) -> RadialProfile:
    """Build a profile from its textual form.

    Examples: ``gaussian``, ``power(-3)``, ``bump(0.5,1.5)``,
    ``power(-2)+-3*power(-4)``, ``kernel_witness(0,0.5,2,0)``
    (side 0 = minus, 1 = plus; then lambda, m, k).
    """
    return _Parser(spec).parse()


def format_profile(profile: RadialProfile) -> str:
    """Canonical textual form; ``parse_profile(format_profile(p))`` rebuilds ``p``."""
    if not profile.label:
        raise ValueError("profile has no textual form")
    return profile.label
