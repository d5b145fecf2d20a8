"""Exact rational scalars plus the number-theoretic helpers used throughout.

The scalar type is :class:`fractions.Fraction`, re-exported as ``Rat``.  It
already guarantees everything required of the field elements here: arbitrary
precision, canonical form (reduced, positive denominator) maintained by every
operation, and structural equality.  The serialized text form is ``p/q`` with
q > 0, or bare ``p`` when q = 1, which is exactly ``str(Fraction)``; parsing
is stricter than ``Fraction(str)`` so files and CLI arguments stay in that
one format.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .errors import DivisorZero, MalformedRational, NotASquare, ZeroDenominator

Rat = Fraction

_RATIONAL_RE = re.compile(r"([+-]?\d+)(?:/(\d+))?\Z")


def rat_parse(text: str) -> Fraction:
    """Parse ``[+-]?digits`` or ``[+-]?digits/digits`` into a canonical Rat."""
    m = _RATIONAL_RE.fullmatch(text.strip())
    if m is None:
        raise MalformedRational(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ZeroDenominator(f"zero denominator in {text!r}")
    return Fraction(num, den)


def rat_str(q: Fraction) -> str:
    """Serialized form: ``p/q`` with q > 0, or bare ``p`` when q = 1."""
    return str(q)


def is_integer(q: Fraction) -> bool:
    return q.denominator == 1


def sqrt_exact(q: Fraction) -> Fraction:
    """The nonnegative rational square root of q, if one exists.

    Raises NotASquare when q is negative or when numerator/denominator are
    not both perfect squares (the field is Q, so no algebraic extensions).
    """
    if q < 0:
        raise NotASquare(f"{q} is negative")
    rn = math.isqrt(q.numerator)
    rd = math.isqrt(q.denominator)
    if rn * rn != q.numerator or rd * rd != q.denominator:
        raise NotASquare(f"{q} is not the square of a rational")
    return Fraction(rn, rd)


def divides(p: Fraction, q: Fraction) -> bool:
    """True iff q/p is an integer, under exact rational division."""
    if p == 0:
        raise DivisorZero("division test against 0")
    return (Fraction(q) / Fraction(p)).denominator == 1
