"""Exact rational scalars.

``QQ`` is ``gmpy2.mpq`` when gmpy2 is importable and ``fractions.Fraction``
otherwise. Both keep the fraction reduced with a positive denominator.
"""

from fractions import Fraction

try:
    from gmpy2 import mpq as QQ
except ImportError:  # pragma: no cover
    QQ = Fraction

__all__ = ["QQ", "to_qq", "numer", "denom"]


def to_qq(value):
    """Convert ints, Fractions, mpq and strings like ``'-3/4'`` to ``QQ``."""
    if isinstance(value, QQ):
        return value
    if isinstance(value, str):
        f = Fraction(value.strip())
        return QQ(f.numerator, f.denominator)
    if isinstance(value, float):
        raise TypeError("floating point values are not exact scalars")
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    return QQ(value)


def numer(q):
    return int(q.numerator)


def denom(q):
    return int(q.denominator)
