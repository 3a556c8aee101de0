"""
Closed intervals with exact rational endpoints.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from proxbound.common.data_types import PreconditionError
from proxbound.exact_core import ScalarLike, UniPoly, to_scalar


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", to_scalar(self.lo))
        object.__setattr__(self, "hi", to_scalar(self.hi))
        if self.lo > self.hi:
            raise PreconditionError(f"Empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, value: ScalarLike) -> Interval:
        value = to_scalar(value)
        return cls(value, value)

    def __contains__(self, value: object) -> bool:
        if not isinstance(value, (int, Fraction)):
            return False
        return self.lo <= value <= self.hi

    def __neg__(self) -> Interval:
        return Interval(-self.hi, -self.lo)

    def __add__(self, other: Interval | ScalarLike) -> Interval:
        other = _as_interval(other)
        return Interval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __sub__(self, other: Interval | ScalarLike) -> Interval:
        return self + (-_as_interval(other))

    def __mul__(self, other: Interval | ScalarLike) -> Interval:
        other = _as_interval(other)
        products = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return Interval(min(products), max(products))

    __rmul__ = __mul__

    def square(self) -> Interval:
        """
        Tight enclosure of {x^2 : x in self}.
        """
        if self.lo >= 0:
            return Interval(self.lo**2, self.hi**2)
        if self.hi <= 0:
            return Interval(self.hi**2, self.lo**2)
        return Interval(Fraction(0), max(self.lo**2, self.hi**2))


def _as_interval(value: Interval | ScalarLike) -> Interval:
    if isinstance(value, Interval):
        return value
    return Interval.point(value)


def poly_enclosure(p: UniPoly, x: Interval) -> Interval:
    """
    Horner-form interval extension of p over x; contains p(x) for all x in the interval.
    """
    result = Interval.point(0)
    for c in reversed(p.coefficients):
        result = result * x + c
    return result


def f_enclosure(x: Interval, y: Interval, z: Interval, phi: UniPoly) -> Interval:
    """
    Enclosure of (x - y)^2 + (phi(x) - z)^2 over a box.
    """
    return (x - y).square() + (poly_enclosure(phi, x) - z).square()
