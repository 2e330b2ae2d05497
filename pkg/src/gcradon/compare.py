"""Two-sided comparison results shared by the identity checks."""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

__all__ = ["Comparison"]


class Comparison(NamedTuple):
    """Values of the two sides of an identity on a common grid.

    Unpacks as the pair ``(lhs, rhs)``.
    """

    lhs: np.ndarray
    rhs: np.ndarray

    @property
    def max_abs(self) -> float:
        """Largest pointwise ``|lhs - rhs|``."""
        d = np.abs(np.asarray(self.lhs, dtype=float) - np.asarray(self.rhs, dtype=float))
        return float(np.max(d)) if d.size else 0.0

    @property
    def max_rel(self) -> float:
        """``max_abs`` relative to the largest ``|rhs|`` (absolute if that is 0)."""
        scale = float(np.max(np.abs(self.rhs))) if np.size(self.rhs) else 0.0
        return self.max_abs / scale if scale > 0 else self.max_abs
