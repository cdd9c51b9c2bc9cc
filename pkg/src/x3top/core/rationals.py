"""Exact rational numbers and their wire format.

All rational parameters in the toolkit (side lengths, capacities,
coefficients) are `fractions.Fraction` values: arbitrary precision,
always in lowest terms, positive denominator.  On the wire they travel
as strings "p/q" (or "p" for integers); floats are rejected outright.
"""

from __future__ import annotations

from fractions import Fraction

Q = Fraction


def parse_rational(text: str | int | Fraction) -> Fraction:
    """Parse "p/q" or an integer literal into an exact rational.

    Decimal points are rejected: the interfaces of this package accept
    exact values only.
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    s = str(text).strip()
    if "." in s or "e" in s.lower():
        raise ValueError(f"not an exact rational literal: {text!r}")
    if "/" in s:
        num, den = s.split("/", 1)
        return Fraction(int(num), int(den))
    return Fraction(int(s))


def format_rational(q: Fraction) -> str:
    """Render a rational as "p/q", or "p" when the denominator is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
