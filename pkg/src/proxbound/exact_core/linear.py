"""
Exact plane points and 2x2 matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from proxbound.common.data_types import PreconditionError

from .scalar import ScalarLike, format_scalar, to_scalar


@dataclass(frozen=True)
class Point2:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", to_scalar(self.x))
        object.__setattr__(self, "y", to_scalar(self.y))

    @classmethod
    def of(cls, x: ScalarLike, y: ScalarLike) -> Point2:
        return cls(to_scalar(x), to_scalar(y))

    def __add__(self, other: Point2) -> Point2:
        return Point2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Point2) -> Point2:
        return Point2(self.x - other.x, self.y - other.y)

    def __neg__(self) -> Point2:
        return Point2(-self.x, -self.y)

    def scale(self, factor: ScalarLike) -> Point2:
        factor = to_scalar(factor)
        return Point2(self.x * factor, self.y * factor)

    def dot(self, other: Point2) -> Fraction:
        return self.x * other.x + self.y * other.y

    def cross(self, other: Point2) -> Fraction:
        return self.x * other.y - self.y * other.x

    def norm2(self) -> Fraction:
        return self.dot(self)

    def as_strings(self) -> list[str]:
        return [format_scalar(self.x), format_scalar(self.y)]

    def __str__(self) -> str:
        return f"({format_scalar(self.x)}, {format_scalar(self.y)})"


@dataclass(frozen=True)
class Matrix2:
    """
    [[a, b], [c, d]] acting on column vectors.
    """

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, to_scalar(getattr(self, name)))

    @classmethod
    def identity(cls) -> Matrix2:
        return cls(Fraction(1), Fraction(0), Fraction(0), Fraction(1))

    @classmethod
    def from_rows(cls, first: Point2, second: Point2) -> Matrix2:
        return cls(first.x, first.y, second.x, second.y)

    @classmethod
    def from_columns(cls, first: Point2, second: Point2) -> Matrix2:
        return cls(first.x, second.x, first.y, second.y)

    @property
    def det(self) -> Fraction:
        return self.a * self.d - self.b * self.c

    def is_invertible(self) -> bool:
        return self.det != 0

    def transpose(self) -> Matrix2:
        return Matrix2(self.a, self.c, self.b, self.d)

    def inverse(self) -> Matrix2:
        det = self.det
        if det == 0:
            raise PreconditionError("Singular matrix has no inverse")
        return Matrix2(self.d / det, -self.b / det, -self.c / det, self.a / det)

    def apply(self, p: Point2) -> Point2:
        return Point2(self.a * p.x + self.b * p.y, self.c * p.x + self.d * p.y)

    def __matmul__(self, other: Matrix2) -> Matrix2:
        return Matrix2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def scale(self, factor: ScalarLike) -> Matrix2:
        factor = to_scalar(factor)
        return Matrix2(self.a * factor, self.b * factor, self.c * factor, self.d * factor)

    def is_orthogonal(self) -> bool:
        return self.transpose() @ self == Matrix2.identity()

    def rows(self) -> list[list[str]]:
        return [
            [format_scalar(self.a), format_scalar(self.b)],
            [format_scalar(self.c), format_scalar(self.d)],
        ]
