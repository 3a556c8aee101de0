"""
The curve family Gamma-hat.

Every parameter tuple ((b, c), (b', c')) with b ~ b' and c ~ c' gives the
curve f(x, b, c) = f(x', b', c') in the (x, x') plane. Expanding
f(x, b, c) = P(x) - 2b x - 2c phi(x) + b^2 + c^2 with P = x^2 + phi^2
builds every member directly from the coefficient lists of P and phi.
"""

import logging
from fractions import Fraction

from proxbound.common.data_types import PreconditionError
from proxbound.exact_core import BiPoly, UniPoly, bipoly_gcd, primitive_part
from proxbound.expansion import GroundData

from .data_types import CurveParams, CurveRecord

logger = logging.getLogger(__name__)


class _CurveBuilder:
    """
    Coefficients of f(x, b, c) as a polynomial in x, cached per (b, c).
    """

    def __init__(self, phi: UniPoly):
        self._phi = phi
        self._base = UniPoly.monomial(2) + phi * phi
        self._size = self._base.degree + 1
        self._cache: dict[tuple[Fraction, Fraction], list[Fraction]] = {}

    def coefficients(self, b: Fraction, c: Fraction) -> list[Fraction]:
        cached = self._cache.get((b, c))
        if cached is not None:
            return cached
        values = [
            self._base.coefficient(k) - 2 * c * self._phi.coefficient(k)
            for k in range(self._size)
        ]
        values[0] += b * b + c * c
        values[1] -= 2 * b
        self._cache[(b, c)] = values
        return values

    def poly(self, cp: CurveParams) -> BiPoly:
        left = self.coefficients(cp.b, cp.c)
        right = self.coefficients(cp.b_prime, cp.c_prime)
        terms: dict[tuple[int, int], Fraction] = {(0, 0): left[0] - right[0]}
        for k in range(1, self._size):
            terms[(k, 0)] = left[k]
            terms[(0, k)] = -right[k]
        raw = BiPoly(terms)
        if raw.is_zero():
            raise PreconditionError(f"Curve of {cp.as_strings()} is the zero polynomial")
        return primitive_part(raw)


def curve_poly(cp: CurveParams, phi: UniPoly) -> BiPoly:
    """
    Canonical primitive form of
    (x - b)^2 + (phi(x) - c)^2 - (x' - b')^2 - (phi(x') - c')^2.
    """
    return _CurveBuilder(phi).poly(cp)


def build_family(g: GroundData, include_diagonal: bool = False) -> list[CurveRecord]:
    """
    One record per parameter tuple of Gamma-hat.

    Args:
        g (GroundData):
            The instance; B and C are split by its t.
        include_diagonal (bool):
            Also admit b = b' and c = c' (the relaxed family, which
            carries the tuples whose curves contain x - x').

    Returns:
        list[CurveRecord]:
            Ordered by segment pair (j, k), then by (b, b', c, c').
    """
    builder = _CurveBuilder(g.phi)
    family: list[CurveRecord] = []
    for j in range(1, g.segments.count + 1):
        b_segment = g.segment("b", j)
        b_pairs = [
            (b, b_prime)
            for b in b_segment
            for b_prime in b_segment
            if include_diagonal or b != b_prime
        ]
        for k in range(1, g.segments.count + 1):
            c_segment = g.segment("c", k)
            c_pairs = [
                (c, c_prime)
                for c in c_segment
                for c_prime in c_segment
                if include_diagonal or c != c_prime
            ]
            for b, b_prime in b_pairs:
                for c, c_prime in c_pairs:
                    params = CurveParams(b=b, c=c, b_prime=b_prime, c_prime=c_prime, j=j, k=k)
                    family.append(CurveRecord(params=params, poly=builder.poly(params)))
    logger.info(
        "Curve family for n=%d, t=%d%s: %d tuples",
        g.n,
        g.t,
        " (with diagonal)" if include_diagonal else "",
        len(family),
    )
    return family


def shared_component(r1: CurveRecord, r2: CurveRecord) -> BiPoly | None:
    """
    The nonconstant gcd of two member polynomials, or None when coprime.
    """
    common = bipoly_gcd(r1.poly, r2.poly)
    return None if common.is_constant() else common
