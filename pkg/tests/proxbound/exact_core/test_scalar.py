from fractions import Fraction

import pytest

from proxbound.common.data_types import PreconditionError
from proxbound.exact_core import (
    denominator_lcm,
    format_scalar,
    parse_scalar,
    rational_sqrt,
    to_scalar,
)


@pytest.mark.parametrize(
    "value, expected",
    [
        (3, Fraction(3)),
        (Fraction(6, 4), Fraction(3, 2)),
        ("-2/6", Fraction(-1, 3)),
        (" 7 ", Fraction(7)),
        ("0.25", Fraction(1, 4)),
    ],
)
def test_to_scalar(value, expected):
    assert to_scalar(value) == expected


@pytest.mark.parametrize("value", [0.5, True, None, "1/0", "one"])
def test_to_scalar_rejects(value):
    with pytest.raises(PreconditionError):
        to_scalar(value)


@pytest.mark.parametrize(
    "value, text",
    [
        (Fraction(5), "5"),
        (Fraction(-3, 4), "-3/4"),
        (Fraction(10, 4), "5/2"),
        (0, "0"),
    ],
)
def test_format_scalar(value, text):
    assert format_scalar(value) == text
    assert parse_scalar(text) == value


def test_denominator_lcm():
    assert denominator_lcm([Fraction(1, 4), Fraction(5, 6), Fraction(2)]) == 12
    assert denominator_lcm([]) == 1


@pytest.mark.parametrize(
    "value, root",
    [
        (Fraction(9, 4), Fraction(3, 2)),
        (Fraction(0), Fraction(0)),
        (Fraction(2), None),
        (Fraction(1, 3), None),
        (Fraction(-4), None),
    ],
)
def test_rational_sqrt(value, root):
    assert rational_sqrt(value) == root
