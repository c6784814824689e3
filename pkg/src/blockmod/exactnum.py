"""Exact rational scalars.

Every coefficient in this package is a ``fractions.Fraction``: arbitrary
precision, reduced on construction, positive denominator, zero stored as
0/1.  Canonical form is enforced by the type itself, so equality of
values is structural equality.  This module pins that choice under the
name ``Rational`` and adds the parse/format/power helpers shared by the
CLI grammar and the verification suites.

Only rational instances are supported; irrational or complex parameter
values are out of scope for this toolkit.
"""

from __future__ import annotations

import re
from fractions import Fraction

Rational = Fraction

_RATIONAL_RE = re.compile(r"\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


class RationalSyntaxError(ValueError):
    """Text does not denote an exact rational."""


def rat(value: int | str | Fraction) -> Fraction:
    """Coerce an int, Fraction, or ``a/b`` string to an exact rational."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def parse_rational(text: str) -> Fraction:
    """Parse ``a`` or ``a/b`` with integer a and positive integer b."""
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise RationalSyntaxError(f"not a rational literal: {text!r}")
    numerator = int(match.group(1))
    if match.group(2) is None:
        return Fraction(numerator)
    denominator = int(match.group(2))
    if denominator == 0:
        raise RationalSyntaxError(f"zero denominator in {text!r}")
    return Fraction(numerator, denominator)


def format_rational(value: Fraction) -> str:
    """Render as ``a`` or ``a/b``; inverse of :func:`parse_rational`."""
    return str(value)


def rat_inv(value: Fraction) -> Fraction:
    if value == 0:
        raise ZeroDivisionError("zero has no inverse")
    return 1 / Fraction(value)


def rat_pow(base: Fraction, exponent: int) -> Fraction:
    """Exact integer power, negative exponents allowed for nonzero base."""
    if base == 0 and exponent < 0:
        raise ZeroDivisionError("zero cannot be raised to a negative power")
    return Fraction(base) ** exponent
