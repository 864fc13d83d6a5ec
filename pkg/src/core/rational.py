"""
Exact rational numbers for geometric predicates.

Rationals are plain ``fractions.Fraction`` values; this module only fixes
the text encoding ("p" or "p/q") and the pydantic type used by the models.
"""
import re
from fractions import Fraction
from typing import Annotated, Any

from pydantic import BeforeValidator, PlainSerializer

_RATIONAL_PATTERN = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def parse_rational(value: Any) -> Fraction:
    """
    Convert a JSON/YAML scalar into an exact Fraction.

    Accepts ints, Fractions and strings of the form "p" or "p/q".
    Floats are rejected: a binary float is never an exact input.
    """
    if isinstance(value, bool):
        raise ValueError(f"Not a rational number: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise ValueError(f"Floats are not exact, write {value!r} as a string 'p/q'")
    if isinstance(value, str):
        match = _RATIONAL_PATTERN.match(value)
        if not match:
            raise ValueError(f"Not a rational number: {value!r}")
        numerator = int(match.group(1))
        denominator = int(match.group(2)) if match.group(2) is not None else 1
        if denominator == 0:
            raise ValueError(f"Zero denominator in {value!r}")
        return Fraction(numerator, denominator)
    raise ValueError(f"Not a rational number: {value!r}")


def format_rational(value: Fraction) -> str:
    """Canonical text form: "p" for integers, "p/q" otherwise."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"




Rational = Annotated[
    Fraction,
    BeforeValidator(parse_rational),
    PlainSerializer(format_rational, return_type=str),
]
