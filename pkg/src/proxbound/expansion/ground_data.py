"""
Ground sets A, B, C, their consecutive-segment partitions,
the proximity relation and the parameter t.
"""

from __future__ import annotations

import bisect
import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import isqrt

import numpy as np

from proxbound.common.data_types import PreconditionError
from proxbound.exact_core import ScalarLike, UniPoly, poly_eval, to_scalar

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Segments:
    """
    Partition of positions 0..n-1 into consecutive segments.

    Attributes:
        sizes (tuple[int, ...]):
            Segment sizes in order; larger segments come first.
    """

    sizes: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.sizes)

    @property
    def total(self) -> int:
        return sum(self.sizes)

    @property
    def starts(self) -> tuple[int, ...]:
        starts = [0]
        for size in self.sizes[:-1]:
            starts.append(starts[-1] + size)
        return tuple(starts)

    def ranges(self) -> list[range]:
        return [range(start, start + size) for start, size in zip(self.starts, self.sizes)]

    def segment_of(self, position: int) -> int:
        """
        1-based index of the segment holding position.
        """
        if not 0 <= position < self.total:
            raise PreconditionError(f"Position {position} outside 0..{self.total - 1}")
        return bisect.bisect_right(self.starts, position)

    def labels(self) -> np.ndarray:
        """
        0-based segment id of every position.
        """
        return np.repeat(np.arange(self.count, dtype=np.int64), self.sizes)


def partition_consecutive(elements: Sequence[object], t: int) -> Segments:
    """
    Split a sorted sequence into t consecutive segments whose sizes
    differ by at most one, larger segments first.
    """
    n = len(elements)
    if not 1 <= t <= n:
        raise PreconditionError(f"Cannot split {n} elements into {t} segments")
    base, extra = divmod(n, t)
    return Segments(tuple(base + 1 if k < extra else base for k in range(t)))


def related(
    x: ScalarLike,
    x_prime: ScalarLike,
    elements: Sequence[Fraction],
    segments: Segments,
) -> bool:
    """
    x ~ x': distinct members of the same segment.
    """
    first = _position(elements, to_scalar(x))
    second = _position(elements, to_scalar(x_prime))
    return first != second and segments.segment_of(first) == segments.segment_of(second)


def _position(elements: Sequence[Fraction], x: Fraction) -> int:
    position = bisect.bisect_left(elements, x)
    if position == len(elements) or elements[position] != x:
        raise PreconditionError(f"{x} is not a member of the ground set")
    return position


def choose_t(n: int, d_size: int, s: int) -> int:
    """
    round(n^(3/2) / (s * |D|^(1/2))), half up, clamped to [1, n].

    With q = n^(3/2) / (s |D|^(1/2)) the half-up rounding is the largest m
    with 2m - 1 <= 2q, i.e. (isqrt(floor(4 q^2)) + 1) // 2; q^2 is rational,
    so no root is ever approximated.
    """
    if n < 1 or d_size < 1 or s < 1:
        raise PreconditionError(f"choose_t needs n, |D|, s >= 1, got {n}, {d_size}, {s}")
    q_squared = Fraction(n**3, s * s * d_size)
    rounded = (isqrt(int(4 * q_squared)) + 1) // 2
    return min(max(rounded, 1), n)


def eval_f(a: ScalarLike, b: ScalarLike, c: ScalarLike, phi: UniPoly) -> Fraction:
    """
    (a - b)^2 + (phi(a) - c)^2, exactly.
    """
    a, b, c = to_scalar(a), to_scalar(b), to_scalar(c)
    return (a - b) ** 2 + (poly_eval(phi, a) - c) ** 2


def _sorted_ground(name: str, values: Iterable[ScalarLike]) -> tuple[Fraction, ...]:
    elements = tuple(to_scalar(v) for v in values)
    for left, right in zip(elements, elements[1:]):
        if not left < right:
            raise PreconditionError(f"{name} must be strictly increasing ({left} >= {right})")
    return elements


@dataclass(frozen=True, kw_only=True)
class GroundData:
    """
    The instance A, B, C, phi with parameters s and t.

    Attributes:
        a, b, c (tuple[Fraction, ...]):
            Strictly increasing ground sets of common size n.
        phi (UniPoly):
            The polynomial in f(x, y, z) = (x - y)^2 + (phi(x) - z)^2.
        s (int):
            Heaviness parameter.
        t (int):
            Number of consecutive segments per set, 1 <= t <= n.
    """

    a: tuple[Fraction, ...]
    b: tuple[Fraction, ...]
    c: tuple[Fraction, ...]
    phi: UniPoly
    s: int
    t: int = 1
    segments: Segments = field(init=False)

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, _sorted_ground(name.upper(), getattr(self, name)))
        if not len(self.a) == len(self.b) == len(self.c):
            raise PreconditionError(
                f"|A|, |B|, |C| must agree, got {len(self.a)}, {len(self.b)}, {len(self.c)}"
            )
        if not self.a:
            raise PreconditionError("Ground sets must be nonempty")
        if self.s < 1:
            raise PreconditionError(f"s must be positive, got {self.s}")
        object.__setattr__(self, "segments", partition_consecutive(self.a, self.t))

    @classmethod
    def of(
        cls,
        a: Iterable[ScalarLike],
        b: Iterable[ScalarLike],
        c: Iterable[ScalarLike],
        phi: UniPoly,
        s: int = 1,
        t: int = 1,
    ) -> GroundData:
        return cls(
            a=tuple(to_scalar(v) for v in a),
            b=tuple(to_scalar(v) for v in b),
            c=tuple(to_scalar(v) for v in c),
            phi=phi,
            s=s,
            t=t,
        )

    @property
    def n(self) -> int:
        return len(self.a)

    def with_t(self, t: int) -> GroundData:
        return replace(self, t=t)

    def with_s(self, s: int) -> GroundData:
        return replace(self, s=s)

    def segment(self, which: str, index: int) -> tuple[Fraction, ...]:
        """
        Elements of the 1-based segment index of "a", "b" or "c".
        """
        elements = getattr(self, which)
        span = self.segments.ranges()[index - 1]
        return elements[span.start : span.stop]

    def related(self, which: str, x: ScalarLike, x_prime: ScalarLike) -> bool:
        return related(x, x_prime, getattr(self, which), self.segments)
