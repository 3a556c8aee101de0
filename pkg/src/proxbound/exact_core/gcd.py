"""
Content, primitive parts and gcds of bivariate polynomials.

The gcd views both polynomials as univariate in x' over the integral
domain Q[x] and runs the subresultant polynomial remainder sequence,
so every intermediate division in the ground ring is exact.
"""

import logging
from fractions import Fraction
from math import gcd

from proxbound.common.data_types import PreconditionError

from .bi_poly import BiPoly
from .scalar import denominator_lcm
from .uni_poly import UniPoly, uni_gcd

logger = logging.getLogger(__name__)

# Recursive dense form: index j holds the Q[x] coefficient of x'^j.
Recursive = list[UniPoly]


def primitive_part(f: BiPoly) -> BiPoly:
    """
    Divide f by its content.

    Denominators are cleared first, then the gcd of the integer
    coefficients is removed, and the sign is fixed so that the
    coefficient of the lex-leading monomial is positive.

    Args:
        f (BiPoly):
            A nonzero polynomial.

    Returns:
        BiPoly:
            The integer-primitive form of f.
    """
    if f.is_zero():
        raise PreconditionError("The zero polynomial has no primitive part")
    coefficients = list(f.terms.values())
    common_denominator = denominator_lcm(coefficients)
    content = 0
    for c in coefficients:
        content = gcd(content, (c * common_denominator).numerator)
    factor = Fraction(common_denominator, content)
    if f.leading_coefficient < 0:
        factor = -factor
    return f.scale(factor)


def bipoly_gcd(f: BiPoly, g: BiPoly) -> BiPoly:
    """
    Greatest common divisor of two bivariate polynomials.

    Args:
        f (BiPoly):
            First polynomial.
        g (BiPoly):
            Second polynomial; f and g must not both be zero.

    Returns:
        BiPoly:
            gcd(f, g) in integer-primitive form with a positive
            lex-leading coefficient; the constant 1 when coprime.
    """
    if f.is_zero() and g.is_zero():
        raise PreconditionError("gcd(0, 0) is undefined")
    if f.is_zero():
        return primitive_part(g)
    if g.is_zero():
        return primitive_part(f)

    f_content, f_primitive = _recursive_primitive(f.to_recursive())
    g_content, g_primitive = _recursive_primitive(g.to_recursive())

    remainders = _subresultant_prs(f_primitive, g_primitive)
    _, last = _recursive_primitive(remainders[-1])
    content = uni_gcd(f_content, g_content)
    result = BiPoly.from_recursive(column * content for column in last)
    return primitive_part(result)


def shares_component(f: BiPoly, g: BiPoly) -> bool:
    return not bipoly_gcd(f, g).is_constant()


def _degree(p: Recursive) -> int:
    return len(p) - 1


def _strip(p: Recursive) -> Recursive:
    p = list(p)
    while p and p[-1].is_zero():
        p.pop()
    return p


def _lead(p: Recursive) -> UniPoly:
    return p[-1] if p else UniPoly()


def _scale(p: Recursive, factor: UniPoly) -> Recursive:
    return _strip([column * factor for column in p])


def _exact_divide(p: Recursive, divisor: UniPoly) -> Recursive:
    return _strip([column.exact_quotient(divisor) for column in p])


def _shifted_sub(r: Recursive, g: Recursive, shift: int) -> Recursive:
    """
    r - g * x'^shift
    """
    result = list(r)
    for k, column in enumerate(g):
        result[k + shift] = result[k + shift] - column
    return _strip(result)


def _pseudo_remainder(f: Recursive, g: Recursive) -> Recursive:
    """
    prem(f, g) = LC(g)^(deg f - deg g + 1) * f mod g.
    """
    df, dg = _degree(f), _degree(g)
    if dg < 0:
        raise ZeroDivisionError("pseudo-remainder by zero")
    if df < dg:
        return list(f)
    remaining = df - dg + 1
    lead_g = _lead(g)
    r = list(f)
    dr = df
    while True:
        lead_r = _lead(r)
        shift = dr - dg
        remaining -= 1
        r = _shifted_sub(_scale(r, lead_g), _scale(g, lead_r), shift)
        dr = _degree(r)
        if dr < dg:
            break
    return _scale(r, lead_g**remaining)


def _subresultant_prs(f: Recursive, g: Recursive) -> list[Recursive]:
    """
    Subresultant remainder sequence of f and g, both nonzero.
    """
    n, m = _degree(f), _degree(g)
    if n < m:
        f, g = g, f
        n, m = m, n

    sequence = [f, g]
    d = n - m
    b = UniPoly.constant((-1) ** (d + 1))
    h = _scale(_pseudo_remainder(f, g), b)
    lead = _lead(g)
    c = lead**d
    c = -c

    while h:
        k = _degree(h)
        sequence.append(h)
        f, g, m, d = g, h, k, m - k
        b = -lead * c**d
        h = _exact_divide(_pseudo_remainder(f, g), b)
        lead = _lead(g)
        if d > 1:
            c = ((-lead) ** d).exact_quotient(c ** (d - 1))
        else:
            c = -lead

    logger.debug("Subresultant sequence of length %d", len(sequence))
    return sequence


def _recursive_primitive(p: Recursive) -> tuple[UniPoly, Recursive]:
    """
    Split p into its Q[x]-content and primitive part.
    """
    content = UniPoly()
    for column in p:
        content = uni_gcd(content, column)
        if content.degree == 0:
            break
    if content.is_zero():
        return UniPoly(), []
    if content.degree == 0:
        return UniPoly.constant(1), list(p)
    return content, _exact_divide(p, content)
