"""
Exact rational scalars.

Every coordinate, coefficient and value of f is a fractions.Fraction,
always in lowest terms with a positive denominator.
"""

from collections.abc import Iterable
from fractions import Fraction
from math import isqrt, lcm
from numbers import Rational

from proxbound.common.data_types import PreconditionError

Scalar = Fraction

ScalarLike = int | Fraction | str


def to_scalar(value: ScalarLike | Rational) -> Fraction:
    """
    Convert an integer, rational or "p/q" string to an exact scalar.

    Floats are refused: a binary float is not the rational the user typed.
    """
    if isinstance(value, bool):
        raise PreconditionError(f"Not a rational value: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return parse_scalar(value)
    raise PreconditionError(f"Not a rational value: {value!r}")


def parse_scalar(text: str) -> Fraction:
    """
    Parse "p", "p/q" or a finite decimal string exactly.
    """
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise PreconditionError(f"Cannot parse rational: {text!r}") from e


def format_scalar(value: Fraction | int) -> str:
    """
    Serialize as "p" or "p/q", never as a decimal.
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def denominator_lcm(values: Iterable[Fraction]) -> int:
    result = 1
    for value in values:
        result = lcm(result, value.denominator)
    return result


def rational_sqrt(value: Fraction) -> Fraction | None:
    """
    Return the exact square root of a nonnegative rational,
    or None when it is irrational.
    """
    if value < 0:
        return None
    num_root = isqrt(value.numerator)
    den_root = isqrt(value.denominator)
    if num_root * num_root != value.numerator or den_root * den_root != value.denominator:
        return None
    return Fraction(num_root, den_root)
