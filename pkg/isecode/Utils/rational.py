# isecode/Utils/rational.py

from fractions import Fraction
from typing import Union
from typing_extensions import Annotated
from pydantic import PlainSerializer, PlainValidator, WithJsonSchema
from isecode.Utils.errors import ParameterError

RationalLike = Union[Fraction, int, str]


def to_fraction(value: RationalLike) -> Fraction:
    """Exact rational from a Fraction, an int or a "num/den" string. Floats are refused."""
    if isinstance(value, bool) or isinstance(value, float):
        raise ParameterError(f"refusing inexact value {value!r}; pass a rational like '1/3'")
    if isinstance(value, (Fraction, int)):
        return Fraction(value)
    try:
        return Fraction(str(value).strip())
    except (ValueError, ZeroDivisionError):
        raise ParameterError(f"{value!r} is not a rational of the form num/den")


def format_rational(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def approx_text(q: Fraction, digits: int = 6) -> str:
    """Text rendering with a decimal approximation in parentheses."""
    return f"{format_rational(q)} (~{float(q):.{digits}g})"


Rational = Annotated[
    Fraction,
    PlainValidator(to_fraction),
    PlainSerializer(format_rational, return_type=str),
    WithJsonSchema({"type": "string", "pattern": r"^-?\d+/\d+$"}),
]
