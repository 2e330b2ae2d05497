"""Exception types raised by the numerical operators."""

from __future__ import annotations


class GCRadonError(Exception):
    """Base class for all errors raised by :mod:`gcradon`."""


class DivergentIntegral(GCRadonError, ValueError):
    """A defining integral does not converge for the given profile."""


class NonPositiveT(GCRadonError, ValueError):
    """An operator on the half line was evaluated at ``t <= 0``."""


class IntegrationBudgetExceeded(GCRadonError, RuntimeError):
    """Quadrature did not reach the requested tolerance within the node budget."""


class FormInapplicable(GCRadonError, ValueError):
    """The requested inversion or derivative form does not apply to the input."""


class InvalidKernelIndex(GCRadonError, ValueError):
    """A kernel witness index violates the parity or range rule."""


class OriginPoint(GCRadonError, ValueError):
    """A transform that is undefined at the origin was evaluated there."""


class PoleCoordinate(GCRadonError, ValueError):
    """A transfer path was evaluated at a pole where its Jacobian vanishes."""


class DegenerateSphere(GCRadonError, ValueError):
    """A geodesic sphere of zero radius was requested."""


class ParseError(GCRadonError, ValueError):
    """A profile specification string could not be parsed.

    Parameters
    ----------
    message : str
        Human readable description.
    position : int
        Zero-based offset in the source string.
    expected : tuple of str
        Tokens that would have been accepted at ``position``.
    """

    def __init__(self, message: str, position: int = 0, expected: tuple[str, ...] = ()):
        self.position = position
        self.expected = tuple(expected)
        detail = f"{message} at position {position}"
        if self.expected:
            detail += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(detail)
