"""Gegenbauer-Chebyshev fractional integrals and Radon-type transforms."""

__version__ = "0.1.0"
