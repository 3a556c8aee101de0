"""
The point set P and exact incidence counting.
"""

import logging
from collections.abc import Sequence

import numpy as np

from proxbound.exact_core import BiPoly, denominator_lcm
from proxbound.expansion import GroundData

from .data_types import CurveRecord, IncidenceCount, PointSetP

logger = logging.getLogger(__name__)

# Curves evaluated per matrix product.
_CURVE_CHUNK = 2048


def point_set_P(g: GroundData, include_diagonal: bool = False) -> PointSetP:
    """
    All ordered pairs (a, a') with a ~ a', segment by segment.

    With include_diagonal the pairs (a, a) are admitted as well,
    matching the relaxed curve family.
    """
    pairs = []
    for span in g.segments.ranges():
        block = g.a[span.start : span.stop]
        pairs.extend(
            (a, a_prime)
            for a in block
            for a_prime in block
            if include_diagonal or a != a_prime
        )
    return PointSetP(pairs=tuple(pairs), diagonal=include_diagonal)


def incidences(
    points: PointSetP,
    curves: Sequence[CurveRecord | BiPoly],
) -> IncidenceCount:
    """
    Count the pairs (p, curve) with the curve polynomial vanishing at p.

    Every polynomial is homogenized to a common degree D and every point
    scaled by the lcm L of the point denominators, so each test becomes
    the vanishing of an integer sum_(i,j) c_ij (La)^i (La')^j L^(D-i-j).
    The sums are taken as one exact object-dtype matrix product.

    Args:
        points (PointSetP):
            The points.
        curves (Sequence[CurveRecord | BiPoly]):
            Curves, as records or bare polynomials.

    Returns:
        IncidenceCount:
            The total and the count per curve, in input order.
    """
    polys = [curve.poly if isinstance(curve, CurveRecord) else curve for curve in curves]
    if not polys or not len(points):
        return IncidenceCount(total=0, per_curve=(0,) * len(polys))

    monomials = sorted(set().union(*(poly.terms.keys() for poly in polys)))
    top = max(i + j for i, j in monomials)
    scale = denominator_lcm([v for pair in points for v in pair])

    values = np.empty((len(points), len(monomials)), dtype=object)
    for row, (a, a_prime) in enumerate(points):
        x, y = int(a * scale), int(a_prime * scale)
        for column, (i, j) in enumerate(monomials):
            values[row, column] = x**i * y**j * scale ** (top - i - j)

    position = {monomial: column for column, monomial in enumerate(monomials)}
    per_curve: list[int] = []
    for start in range(0, len(polys), _CURVE_CHUNK):
        chunk = polys[start : start + _CURVE_CHUNK]
        coefficients = np.zeros((len(chunk), len(monomials)), dtype=object)
        for row, poly in enumerate(chunk):
            common = denominator_lcm(poly.terms.values())
            for monomial, c in poly.terms.items():
                coefficients[row, position[monomial]] = int(c * common)
        products = coefficients.dot(values.T)
        per_curve.extend(int(count) for count in (products == 0).sum(axis=1))

    total = sum(per_curve)
    logger.debug("%d points, %d curves: %d incidences", len(points), len(polys), total)
    return IncidenceCount(total=total, per_curve=tuple(per_curve))
