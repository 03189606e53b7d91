"""Exact rationals.

Every centrality value is a :class:`fractions.Fraction`; this module only adds
the constructor with the toolkit's error type and the two text forms used at
serialization boundaries ("p/q" and fixed-point decimal).
"""

from __future__ import annotations

from fractions import Fraction

Rational = Fraction

ZERO = Fraction(0)


def rat(n: int, d: int = 1) -> Fraction:
    """Canonical n/d. Raises ZeroDivisionError for d == 0."""
    if d == 0:
        raise ZeroDivisionError(f"rat({n}, 0): zero denominator")
    return Fraction(n, d)


def to_text(a: Fraction) -> str:
    """Exact form ``p/q``; the denominator is printed even when it is 1."""
    return f"{a.numerator}/{a.denominator}"


def parse_rational(text: str) -> Fraction:
    """Inverse of :func:`to_text`. Also accepts a bare integer."""
    text = text.strip()
    num, sep, den = text.partition("/")
    try:
        return rat(int(num), int(den) if sep else 1)
    except ValueError:
        raise ValueError(f"not a rational: {text!r}") from None


def to_decimal_string(a: Fraction, digits: int) -> str:
    """Round ``a`` to ``digits`` places (half away from zero) and render it.

    >>> to_decimal_string(Fraction(-1, 5), 2)
    '-0.20'
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    scale = 10**digits
    q, r = divmod(abs(a.numerator) * scale, a.denominator)
    if 2 * r >= a.denominator:
        q += 1
    whole, frac = divmod(q, scale)
    sign = "-" if a < 0 and q else ""
    return f"{sign}{whole}.{frac:0{digits}d}"
