"""
Symmetries of polynomial graphs {(t, phi(t))}.

An isometry fixing the graph of a polynomial of degree >= 2 must keep
the graph unbounded in the same vertical direction and send vertical
lines to vertical lines, so its linear part is diagonal with entries +-1.
Translations shift the graph off itself and y -> -y flips the direction
of growth, which leaves three families: the identity, the reflection in
a vertical line x = c, and the half-turn about a point (c, d).
Comparing the x^(deg-1) coefficients pins c to -a_(deg-1) / (deg * a_deg).
"""

import logging
from fractions import Fraction

from proxbound.common.data_types import PreconditionError
from proxbound.exact_core import Point2, UniPoly, poly_compose_affine

from .isometry import Isometry

logger = logging.getLogger(__name__)


def fixes_graph(r: Isometry, phi: UniPoly) -> bool:
    """
    True when r maps the graph of phi onto itself.

    The image of (x, phi(x)) is (u(x), v(x)) with u, v polynomials;
    the graph is fixed exactly when u has degree one and v = phi(u).
    """
    m = r.linear
    x = UniPoly.monomial(1)
    u = x * m.a + phi * m.b + r.translation.x
    v = x * m.c + phi * m.d + r.translation.y
    return u.degree == 1 and phi.compose(u) == v


def symmetry_center(phi: UniPoly) -> Fraction:
    degree = phi.degree
    return -phi.coefficient(degree - 1) / (degree * phi.leading_coefficient)


def graph_symmetries(phi: UniPoly) -> list[Isometry]:
    """
    Enumerate the isometries of the plane fixing the graph of phi.

    Args:
        phi (UniPoly):
            Polynomial of degree at least 3.

    Returns:
        list[Isometry]:
            The identity first, then the nontrivial symmetry if any;
            at most 4 * deg(phi) elements.
    """
    if phi.degree < 3:
        raise PreconditionError(f"deg phi must be at least 3, got {phi.degree}")

    symmetries = [Isometry.identity()]
    c = symmetry_center(phi)
    mirrored = poly_compose_affine(phi, -1, 2 * c)

    if phi.degree % 2 == 0:
        if mirrored == phi:
            symmetries.append(Isometry.vertical_reflection(c))
    else:
        # phi(2c - x) + phi(x) must be the constant 2 phi(c).
        if mirrored + phi == UniPoly.constant(2 * phi(c)):
            symmetries.append(Isometry.half_turn(Point2(c, phi(c))))

    for r in symmetries:
        if not fixes_graph(r, phi):
            raise AssertionError(f"Detected symmetry {r.to_dict()} does not fix the graph")
    logger.debug("phi = %s has %d symmetries", phi, len(symmetries))
    return symmetries
