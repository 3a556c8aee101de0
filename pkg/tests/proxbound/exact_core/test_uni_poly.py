from fractions import Fraction

import pytest

from proxbound.common.data_types import PreconditionError
from proxbound.exact_core import UniPoly, poly_compose_affine, poly_eval, uni_gcd


def test_trailing_zeros_are_stripped():
    p = UniPoly.of([1, 2, 0, 0])
    assert p.coefficients == (Fraction(1), Fraction(2))
    assert p.degree == 1
    assert UniPoly.of([0, 0]).is_zero()
    assert UniPoly().degree == -1


def test_arithmetic():
    p = UniPoly.of([1, 1])
    q = UniPoly.of([-1, 1])
    assert p * q == UniPoly.of([-1, 0, 1])
    assert p + q == UniPoly.of([0, 2])
    assert p - p == UniPoly()
    assert p**3 == UniPoly.of([1, 3, 3, 1])
    assert 2 * p == UniPoly.of([2, 2])


def test_divmod():
    p = UniPoly.of([1, 0, 0, 1])
    q = UniPoly.of([1, 1])
    quotient, remainder = divmod(p, q)
    assert quotient == UniPoly.of([1, -1, 1])
    assert remainder.is_zero()
    assert p.exact_quotient(q) == quotient


def test_exact_quotient_rejects_remainder():
    with pytest.raises(PreconditionError):
        UniPoly.of([1, 0, 1]).exact_quotient(UniPoly.of([1, 1]))


def test_eval_and_call():
    phi = UniPoly.of([0, 1, 1, 1])
    assert poly_eval(phi, Fraction(2)) == 14
    assert phi("1/2") == Fraction(7, 8)


def test_compose_affine_matches_compose():
    phi = UniPoly.of([1, -2, 0, 3])
    expected = phi.compose(UniPoly.of([Fraction(1, 3), 2]))
    assert poly_compose_affine(phi, 2, Fraction(1, 3)) == expected


def test_uni_gcd_is_monic():
    p = UniPoly.of([-2, 0, 2])  # 2(x - 1)(x + 1)
    q = UniPoly.of([3, 3])  # 3(x + 1)
    assert uni_gcd(p, q) == UniPoly.of([1, 1])
    assert uni_gcd(UniPoly.of([1, 1]), UniPoly.of([2])) == UniPoly.constant(1)


def test_format():
    assert UniPoly.of([0, 0, 0, 1]).format() == "x^3"
    assert UniPoly.of([-1, Fraction(1, 2), 0, -1]).format() == "-x^3 + 1/2*x - 1"
    assert UniPoly().format() == "0"
