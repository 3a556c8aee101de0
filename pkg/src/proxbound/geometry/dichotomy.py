"""
Congruence test for point triples and the congruence/conic dichotomy.

For triples p, p' let Sigma be the set of (q, q') with
|p_i - q| = |p_i' - q'| for i = 1, 2, 3. Either p and p' are
congruent, or the projections of Sigma lie on curves of degree
at most two (possibly lines, possibly empty).
"""

import logging
from fractions import Fraction

from proxbound.common.data_types import IrrationalNormalizerError
from proxbound.exact_core import BiPoly, Matrix2, Point2, primitive_part, rational_sqrt

from .data_types import (
    ConicPair,
    Congruent,
    Empty,
    SigmaOutcome,
    SigmaSystem,
    Triple,
    TriplePair,
    VerticalLines,
    is_collinear,
)
from .isometry import Isometry

logger = logging.getLogger(__name__)


def _maps_triple(r: Isometry, p: Triple, p_prime: Triple) -> bool:
    return all(r.apply(a) == b for a, b in zip(p, p_prime))


def congruent_triples(tp: TriplePair) -> Isometry | None:
    """
    Find an isometry mapping p_i to p_i' for i = 1, 2, 3.

    Args:
        tp (TriplePair):
            The triples to compare.

    Returns:
        Isometry | None:
            A witness, orientation-preserving whenever both
            orientations fit; None when the triples are not congruent.
    """
    p1, p2, p3 = tp.p
    q1, q2, q3 = tp.p_prime
    for (a, b), (c, d) in (((p1, p2), (q1, q2)), ((p1, p3), (q1, q3)), ((p2, p3), (q2, q3))):
        if (a - b).norm2() != (c - d).norm2():
            return None

    first, second = p1 - p3, p2 - p3
    first_prime, second_prime = q1 - q3, q2 - q3

    if not is_collinear(tp.p):
        # M sends the columns (p_1 - p_3, p_2 - p_3) to their primed counterparts.
        linear = Matrix2.from_columns(first_prime, second_prime) @ (
            Matrix2.from_columns(first, second).inverse()
        )
        candidates = [linear]
    else:
        length2 = first.norm2()
        cos = first.dot(first_prime) / length2
        sin = first.cross(first_prime) / length2
        rotation = Matrix2(cos, -sin, sin, cos)
        mirror = Matrix2(
            (first.x * first.x - first.y * first.y) / length2,
            2 * first.x * first.y / length2,
            2 * first.x * first.y / length2,
            (first.y * first.y - first.x * first.x) / length2,
        )
        candidates = [rotation, rotation @ mirror]

    for linear in candidates:
        if not linear.is_orthogonal():
            continue
        witness = Isometry(linear, q3 - linear.apply(p3))
        if _maps_triple(witness, tp.p, tp.p_prime):
            return witness
    return None


def sigma_dichotomy(tp: TriplePair) -> SigmaOutcome:
    """
    Classify the distance system of a triple pair.

    Args:
        tp (TriplePair):
            p pairwise distinct; p' arbitrary.

    Returns:
        SigmaOutcome:
            Congruent, ConicPair, VerticalLines or Empty.
    """
    if not is_collinear(tp.p_prime):
        outcome = _primed_non_collinear(tp.p, tp.p_prime)
    elif not is_collinear(tp.p):
        outcome = _swap_back(_primed_non_collinear(tp.p_prime, tp.p))
    else:
        outcome = _both_collinear(tp)
    logger.debug("Dichotomy outcome %s", outcome.kind)
    return outcome


def _swap_back(outcome: SigmaOutcome) -> SigmaOutcome:
    match outcome:
        case Congruent(witness=witness):
            return Congruent(witness=witness.inverse())
        case ConicPair(sigma=sigma, sigma_prime=sigma_prime):
            return ConicPair(sigma=sigma_prime, sigma_prime=sigma)
        case _:
            return outcome


def _sigma_polynomial(p3: Point2, p3_prime: Point2, linear: Matrix2, w: Point2) -> BiPoly:
    """
    |p_3 - q|^2 - |p_3' - T q|^2 with T q = linear q + w, as a polynomial in q.
    """
    qx, qy = BiPoly.first(), BiPoly.second()
    tx = BiPoly.linear(linear.a, linear.b, w.x)
    ty = BiPoly.linear(linear.c, linear.d, w.y)
    left = (qx - p3.x) ** 2 + (qy - p3.y) ** 2
    right = (tx - p3_prime.x) ** 2 + (ty - p3_prime.y) ** 2
    return left - right


def _primed_non_collinear(p: Triple, p_prime: Triple) -> SigmaOutcome:
    system = SigmaSystem.of(p, p_prime)
    assert system.w is not None
    b_inverse = system.b.inverse()
    linear = b_inverse @ system.a

    if linear.is_orthogonal():
        # Then p_i - p_3 = M^T (p_i' - p_3'), so q -> M (q - p_3) + p_3' is a witness.
        witness = Isometry(linear, p_prime[2] - linear.apply(p[2]))
        return Congruent(witness=witness)

    sigma = primitive_part(_sigma_polynomial(p[2], p_prime[2], linear, system.w))

    if system.a.is_invertible():
        reverse = SigmaSystem.of(p_prime, p)
        assert reverse.w is not None
        reverse_linear = system.a.inverse() @ system.b
        sigma_prime = primitive_part(
            _sigma_polynomial(p_prime[2], p[2], reverse_linear, reverse.w)
        )
    else:
        sigma_prime = _image_curve(system.a, b_inverse, system.w)

    return ConicPair(sigma=sigma, sigma_prime=sigma_prime)


def _image_curve(a: Matrix2, b_inverse: Matrix2, w: Point2) -> BiPoly:
    """
    Degree <= 2 curve containing the image of q -> B^{-1} A q + w for singular A:
    the line through w along the image direction, or the point w itself
    (as a circle of radius zero) when A vanishes.
    """
    if a == Matrix2(Fraction(0), Fraction(0), Fraction(0), Fraction(0)):
        qx, qy = BiPoly.first(), BiPoly.second()
        return primitive_part((qx - w.x) ** 2 + (qy - w.y) ** 2)
    column = Point2(a.a, a.c) if (a.a, a.c) != (0, 0) else Point2(a.b, a.d)
    direction = b_inverse.apply(column)
    return primitive_part(
        BiPoly.linear(-direction.y, direction.x, direction.y * w.x - direction.x * w.y)
    )


def _axis_frame(points: Triple) -> tuple[Isometry, Triple]:
    """
    Rigid motion taking the third point to the origin and a collinear
    triple onto the x-axis, with the first nonzero offset on the positive side.
    """
    origin = points[2]
    direction = next(
        (q - origin for q in points[:2] if q != origin),
        None,
    )
    if direction is None:
        frame = Isometry.translation_by(-origin)
    else:
        length = rational_sqrt(direction.norm2())
        if length is None:
            raise IrrationalNormalizerError(
                f"Line direction {direction} has irrational length"
            )
        cos, sin = direction.x / length, direction.y / length
        rotation = Matrix2(cos, sin, -sin, cos)
        frame = Isometry(rotation, -rotation.apply(origin))
    moved = tuple(frame.apply(q) for q in points)
    return frame, (moved[0], moved[1], moved[2])


def _both_collinear(tp: TriplePair) -> SigmaOutcome:
    frame, p = _axis_frame(tp.p)
    frame_prime, p_prime = _axis_frame(tp.p_prime)
    a, b = p[0].x, p[1].x
    a_prime, b_prime = p_prime[0].x, p_prime[1].x

    # -2a x + 2a' x' = a'^2 - a^2 and -2b x + 2b' x' = b'^2 - b^2.
    det = 4 * (a_prime * b - a * b_prime)
    if det != 0:
        rhs_first = a_prime**2 - a**2
        rhs_second = b_prime**2 - b**2
        x0 = (2 * b_prime * rhs_first - 2 * a_prime * rhs_second) / det
        x0_prime = (-2 * a * rhs_second + 2 * b * rhs_first) / det
        return VerticalLines(x0=x0, x0_prime=x0_prime, frame=frame, frame_prime=frame_prime)

    ratio = a_prime / a
    if ratio in (Fraction(1), Fraction(-1)):
        witness = congruent_triples(tp)
        if witness is None:
            raise AssertionError("Collinear triples with ratio +-1 must be congruent")
        return Congruent(witness=witness)
    return Empty()
