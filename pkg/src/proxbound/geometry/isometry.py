"""
Exact plane isometries q -> M q + translation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from proxbound.common.data_types import PreconditionError
from proxbound.exact_core import Matrix2, Point2, ScalarLike, format_scalar, to_scalar


@dataclass(frozen=True)
class Isometry:
    """
    Distance-preserving affine map of the plane.

    Attributes:
        linear (Matrix2):
            Orthogonal linear part (M^T M = I exactly, det = +1 or -1).
        translation (Point2):
            Image of the origin.
    """

    linear: Matrix2
    translation: Point2

    def __post_init__(self):
        if not self.linear.is_orthogonal():
            raise PreconditionError(f"Linear part {self.linear.rows()} is not orthogonal")

    @classmethod
    def identity(cls) -> Isometry:
        return cls(Matrix2.identity(), Point2.of(0, 0))

    @classmethod
    def translation_by(cls, offset: Point2) -> Isometry:
        return cls(Matrix2.identity(), offset)

    @classmethod
    def rotation(
        cls, cos: ScalarLike, sin: ScalarLike, center: Point2 | None = None
    ) -> Isometry:
        """
        Rotation by the angle with the given rational cosine and sine
        about center (the origin by default).
        """
        cos, sin = to_scalar(cos), to_scalar(sin)
        linear = Matrix2(cos, -sin, sin, cos)
        return cls._about(linear, center)

    @classmethod
    def reflection(
        cls, cos: ScalarLike, sin: ScalarLike, center: Point2 | None = None
    ) -> Isometry:
        """
        Reflection [[cos, sin], [sin, -cos]] in the line through center.
        """
        cos, sin = to_scalar(cos), to_scalar(sin)
        linear = Matrix2(cos, sin, sin, -cos)
        return cls._about(linear, center)

    @classmethod
    def half_turn(cls, center: Point2) -> Isometry:
        return cls(Matrix2.identity().scale(-1), center.scale(2))

    @classmethod
    def vertical_reflection(cls, abscissa: ScalarLike) -> Isometry:
        """
        Reflection in the vertical line x = abscissa.
        """
        abscissa = to_scalar(abscissa)
        return cls(
            Matrix2(Fraction(-1), Fraction(0), Fraction(0), Fraction(1)),
            Point2(2 * abscissa, Fraction(0)),
        )

    @classmethod
    def _about(cls, linear: Matrix2, center: Point2 | None) -> Isometry:
        if center is None:
            return cls(linear, Point2.of(0, 0))
        return cls(linear, center - linear.apply(center))

    @property
    def det(self) -> Fraction:
        return self.linear.det

    def is_identity(self) -> bool:
        return self == Isometry.identity()

    def apply(self, q: Point2) -> Point2:
        return self.linear.apply(q) + self.translation

    def compose(self, inner: Isometry) -> Isometry:
        """
        self after inner.
        """
        return Isometry(
            self.linear @ inner.linear,
            self.linear.apply(inner.translation) + self.translation,
        )

    def inverse(self) -> Isometry:
        transposed = self.linear.transpose()
        return Isometry(transposed, -transposed.apply(self.translation))

    @property
    def kind(self) -> str:
        m = self.linear
        if m == Matrix2.identity():
            return "identity" if self.translation == Point2.of(0, 0) else "translation"
        if self.det == 1:
            return "half-turn" if m == Matrix2.identity().scale(-1) else "rotation"
        # An orientation-reversing map fixes a point iff it is a pure reflection.
        residual = m.apply(self.translation) + self.translation
        return "reflection" if residual == Point2.of(0, 0) else "glide-reflection"

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": self.kind,
            "linear": self.linear.rows(),
            "translation": self.translation.as_strings(),
            "det": format_scalar(self.det),
        }


def apply_isometry(r: Isometry, q: Point2) -> Point2:
    """
    Exact image r(q).
    """
    return r.apply(q)
