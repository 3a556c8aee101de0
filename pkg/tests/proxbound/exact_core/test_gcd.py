import random
from fractions import Fraction

import pytest
import sympy

from proxbound.common.data_types import PreconditionError
from proxbound.exact_core import BiPoly, bipoly_gcd, primitive_part, shares_component

X = BiPoly.first()
Y = BiPoly.second()

sx, sy = sympy.symbols("x y")


def to_sympy(p: BiPoly) -> sympy.Poly:
    expr = sum(
        (sympy.Rational(c.numerator, c.denominator) * sx**i * sy**j for (i, j), c in p),
        sympy.Integer(0),
    )
    return sympy.Poly(expr, sx, sy, domain="QQ")


def from_sympy(p: sympy.Poly) -> BiPoly:
    return BiPoly(
        {
            monomial: Fraction(int(c.p), int(c.q))
            for monomial, c in zip(p.monoms(), p.coeffs())
        }
    )


def random_poly(rng: random.Random, degree: int) -> BiPoly:
    terms = {
        (i, j): rng.randint(-3, 3)
        for i in range(degree + 1)
        for j in range(degree + 1 - i)
        if rng.random() < 0.6
    }
    p = BiPoly(terms)
    return p if not p.is_constant() else p + X + Y


def test_primitive_part():
    p = BiPoly.linear(Fraction(-2, 3), Fraction(4, 3), 2)
    assert primitive_part(p) == BiPoly.linear(1, -2, -3)
    with pytest.raises(PreconditionError):
        primitive_part(BiPoly())


def test_gcd_of_linear_factors():
    f = (X - Y) * (X + Y)
    g = (X - Y) * (X**2 + Y + 1)
    assert bipoly_gcd(f, g) == X - Y
    assert shares_component(f, g)


def test_coprime_gives_one():
    assert bipoly_gcd(X**2 + Y, X - Y + 1) == BiPoly.constant(1)
    assert not shares_component(X**2 + Y, X - Y + 1)


def test_content_in_first_variable():
    f = (X + 1) * (Y**2 + 1)
    g = (X + 1) * (Y + X)
    assert bipoly_gcd(f, g) == X + 1


def test_zero_arguments():
    assert bipoly_gcd(BiPoly(), 2 * X - 4) == X - 2
    with pytest.raises(PreconditionError):
        bipoly_gcd(BiPoly(), BiPoly())


@pytest.mark.parametrize("seed", range(25))
def test_gcd_matches_sympy(seed):
    rng = random.Random(seed)
    common = random_poly(rng, 2)
    f = common * random_poly(rng, 2)
    g = common * random_poly(rng, 2)

    expected = primitive_part(from_sympy(sympy.gcd(to_sympy(f), to_sympy(g))))
    result = bipoly_gcd(f, g)

    assert result == expected
    assert result.divides(f)
    assert result.divides(g)


def test_documented_examples():
    assert bipoly_gcd((X - Y) * (X + 1), (X - Y) * (Y + 2)) == X - Y
    assert bipoly_gcd(X**2 - Y**2, X - Y) == X - Y


@pytest.mark.parametrize("seed", range(25))
def test_gcd_is_symmetric(seed):
    rng = random.Random(100 + seed)
    common = random_poly(rng, 2)
    f = common * random_poly(rng, 3)
    g = common * random_poly(rng, 2)
    assert bipoly_gcd(f, g) == bipoly_gcd(g, f)


@pytest.mark.parametrize("seed", range(15))
def test_common_factor_divides_gcd(seed):
    rng = random.Random(200 + seed)
    common = random_poly(rng, 2)
    f = common * random_poly(rng, 2)
    g = common * random_poly(rng, 2)
    result = bipoly_gcd(f.scale(Fraction(3, 7)), g.scale(-2))
    assert primitive_part(common).divides(result)
    assert result == bipoly_gcd(f, g)
