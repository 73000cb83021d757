"""Exact rational scalars shared by every module.

``Rational`` is the stdlib ``Fraction``: lowest terms, positive
denominator, exact field arithmetic. This module only adds strict
conversion (floats are refused) and compact serialization.
"""

from __future__ import annotations

from fractions import Fraction

Rational = Fraction


class NonRational(TypeError):
    """A value could not be interpreted as an exact rational."""


def as_rational(value: object) -> Fraction:
    """Convert to ``Fraction`` without ever rounding.

    Accepts int, Fraction, and strings such as "3", "-7/2", "0.125" or
    "1e-3", all of which are exact. Floats are rejected: their binary
    rounding error must not leak into verdicts.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise NonRational(f"cannot interpret {value!r} as a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise NonRational(f"not an exact rational: {value!r}") from exc
    if isinstance(value, float):
        raise NonRational(
            f"refusing float {value!r}: pass an int, a Fraction, or an exact string"
        )
    raise NonRational(f"cannot interpret {type(value).__name__} as a rational")


def format_rational(value: Fraction) -> str:
    """Lossless text form: "p/q", or plain "p" for integers."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def rational_to_json(value: Fraction):
    """JSON form: a bare int when integral, otherwise a "p/q" string."""
    if value.denominator == 1:
        return value.numerator
    return format_rational(value)
