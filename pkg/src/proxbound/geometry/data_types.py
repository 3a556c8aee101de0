"""
Data types for the congruence/conic dichotomy.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, ClassVar

from proxbound.common.data_types import PreconditionError
from proxbound.exact_core import BiPoly, Matrix2, Point2, format_scalar

from .isometry import Isometry

Triple = tuple[Point2, Point2, Point2]


def is_collinear(points: Triple) -> bool:
    p1, p2, p3 = points
    return (p1 - p3).cross(p2 - p3) == 0


@dataclass(frozen=True)
class TriplePair:
    """
    Two ordered point triples p and p'.

    The unprimed triple must be pairwise distinct;
    the primed triple may contain repeated points.
    """

    p: Triple
    p_prime: Triple

    def __post_init__(self):
        p1, p2, p3 = self.p
        if p1 == p2 or p1 == p3 or p2 == p3:
            raise PreconditionError(
                f"Triple points must be pairwise distinct: {[str(q) for q in self.p]}"
            )

    def swapped(self) -> tuple[Triple, Triple]:
        return self.p_prime, self.p


@dataclass(frozen=True, kw_only=True)
class SigmaSystem:
    """
    Linear data of the distance system |p_i - q| = |p_i' - q'|, i = 1, 2, 3.

    Subtracting the third equation from the first two gives
    2 A q - u = 2 B q' - v.

    Attributes:
        a (Matrix2):
            Rows p_1 - p_3 and p_2 - p_3.
        b (Matrix2):
            Rows p_1' - p_3' and p_2' - p_3'.
        u (Point2):
            (|p_1|^2 - |p_3|^2, |p_2|^2 - |p_3|^2).
        v (Point2):
            The same for the primed triple.
        w (Point2 | None):
            (1/2) B^{-1} (v - u) when B is invertible.
    """

    a: Matrix2
    b: Matrix2
    u: Point2
    v: Point2
    w: Point2 | None

    @classmethod
    def of(cls, p: Triple, p_prime: Triple) -> "SigmaSystem":
        p1, p2, p3 = p
        q1, q2, q3 = p_prime
        a = Matrix2.from_rows(p1 - p3, p2 - p3)
        b = Matrix2.from_rows(q1 - q3, q2 - q3)
        u = Point2(p1.norm2() - p3.norm2(), p2.norm2() - p3.norm2())
        v = Point2(q1.norm2() - q3.norm2(), q2.norm2() - q3.norm2())
        w = b.inverse().apply(v - u).scale(Fraction(1, 2)) if b.is_invertible() else None
        return cls(a=a, b=b, u=u, v=v, w=w)


@dataclass(frozen=True, kw_only=True)
class Congruent:
    """
    p and p' are congruent; witness maps p_i to p_i' exactly.
    """

    kind: ClassVar[str] = "congruent"

    witness: Isometry

    def to_dict(self) -> dict[str, Any]:
        return {"outcome": self.kind, "witness": self.witness.to_dict()}


@dataclass(frozen=True, kw_only=True)
class ConicPair:
    """
    sigma in (x, y) and sigma_prime in (x', y'), each of total degree at most 2.
    """

    kind: ClassVar[str] = "conic_pair"

    sigma: BiPoly
    sigma_prime: BiPoly

    def to_dict(self) -> dict[str, Any]:
        return {
            "outcome": self.kind,
            "sigma": self.sigma.format(("x", "y")),
            "sigma_prime": self.sigma_prime.format(("x'", "y'")),
        }


@dataclass(frozen=True, kw_only=True)
class VerticalLines:
    """
    Both projections are vertical lines x = x0 and x' = x0_prime.

    The abscissae are measured in the normalized frames: frame (resp.
    frame_prime) is the rigid motion sending p_3 (resp. p_3') to the
    origin and the triple onto the x-axis.
    """

    kind: ClassVar[str] = "vertical_lines"

    x0: Fraction
    x0_prime: Fraction
    frame: Isometry
    frame_prime: Isometry

    def to_dict(self) -> dict[str, Any]:
        return {
            "outcome": self.kind,
            "x0": format_scalar(self.x0),
            "x0_prime": format_scalar(self.x0_prime),
            "frame": self.frame.to_dict(),
            "frame_prime": self.frame_prime.to_dict(),
        }


@dataclass(frozen=True, kw_only=True)
class Empty:
    """
    The distance system has no solution.
    """

    kind: ClassVar[str] = "empty"

    def to_dict(self) -> dict[str, Any]:
        return {"outcome": self.kind}


SigmaOutcome = Congruent | ConicPair | VerticalLines | Empty
