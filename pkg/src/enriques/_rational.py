"""Exact rational type: gmpy2's mpq when installed, else fractions.Fraction."""

try:
    from gmpy2 import mpq as Fraction
except ImportError:  # pragma: no cover
    from fractions import Fraction

__all__ = ["Fraction"]
