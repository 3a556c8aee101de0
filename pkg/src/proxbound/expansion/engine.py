"""
Vectorized counting engine.

All values of f on the grid are scaled to integers: with L the lcm of
the denominators of A, B, C and phi(A), every L^2 * f(a, b, c) equals
(La - Lb)^2 + (L phi(a) - Lc)^2, an integer key. Keys are int64 when the
largest possible key fits, Python integers in object arrays otherwise.
The grid is processed one A-segment slab at a time; within a slab,
triples are grouped on (value, j, k) by sorting.
"""

import logging
from collections.abc import Iterator
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from proxbound.exact_core import denominator_lcm, poly_eval

from .ground_data import GroundData

logger = logging.getLogger(__name__)

_INT64_LIMIT = 2**63 - 1

# Upper bound on grid cells materialized at once for image-only passes.
_CHUNK_CELLS = 1 << 22


@dataclass(frozen=True, kw_only=True)
class ScaledInstance:
    """
    Integer images of the ground sets.

    Attributes:
        scale (int):
            L; the value of key k is k / L^2.
        a, phi_a, b, c (np.ndarray):
            L*a, L*phi(a), L*b, L*c.
        exact_int64 (bool):
            Whether keys are stored as int64.
    """

    scale: int
    a: np.ndarray
    phi_a: np.ndarray
    b: np.ndarray
    c: np.ndarray
    exact_int64: bool

    def value_of(self, key: int) -> Fraction:
        return Fraction(int(key), self.scale**2)

    def key_of(self, value: Fraction) -> int | None:
        """
        Key of a value, or None when the value is not a multiple of 1/L^2.
        """
        scaled = value * self.scale**2
        if scaled.denominator != 1:
            return None
        return scaled.numerator

    def keys_for_rows(self, rows: slice) -> np.ndarray:
        """
        Keys of every (a, b, c) with a in the given rows, shape (rows, n, n).
        """
        dx = self.a[rows, None] - self.b[None, :]
        dy = self.phi_a[rows, None] - self.c[None, :]
        return (dx * dx)[:, :, None] + (dy * dy)[:, None, :]


def scale_instance(g: GroundData) -> ScaledInstance:
    phi_values = [poly_eval(g.phi, a) for a in g.a]
    scale = denominator_lcm([*g.a, *g.b, *g.c, *phi_values])

    def scaled(values):
        return [int(v * scale) for v in values]

    a, phi_a, b, c = scaled(g.a), scaled(phi_values), scaled(g.b), scaled(g.c)
    spread_x = max(max(a), max(b)) - min(min(a), min(b))
    spread_y = max(max(phi_a), max(c)) - min(min(phi_a), min(c))
    exact_int64 = spread_x**2 + spread_y**2 <= _INT64_LIMIT
    dtype = np.int64 if exact_int64 else object
    logger.debug("Scale %d, %s keys", scale, "int64" if exact_int64 else "object")
    return ScaledInstance(
        scale=scale,
        a=np.array(a, dtype=dtype),
        phi_a=np.array(phi_a, dtype=dtype),
        b=np.array(b, dtype=dtype),
        c=np.array(c, dtype=dtype),
        exact_int64=exact_int64,
    )


def image_keys(instance: ScaledInstance) -> np.ndarray:
    """
    Sorted distinct keys over the whole grid.
    """
    n = len(instance.a)
    rows_per_chunk = max(1, _CHUNK_CELLS // (n * n))
    partial = [
        np.unique(instance.keys_for_rows(slice(start, min(start + rows_per_chunk, n))))
        for start in range(0, n, rows_per_chunk)
    ]
    return np.unique(np.concatenate(partial))


@dataclass(frozen=True, kw_only=True)
class BoxGroups:
    """
    Nonempty groups G_d ∩ (A_i x B_j x C_k) of one slab.

    All arrays are aligned; i, j, k are 1-based.

    Attributes:
        value_index (np.ndarray):
            Index of d in the sorted image keys.
        i, j, k (np.ndarray):
            Box coordinates.
        size (np.ndarray):
            m = |G_d ∩ box|.
        strict_pairs (np.ndarray):
            Ordered pairs in the group differing in all three coordinates.
    """

    value_index: np.ndarray
    i: np.ndarray
    j: np.ndarray
    k: np.ndarray
    size: np.ndarray
    strict_pairs: np.ndarray

    @property
    def relaxed_pairs(self) -> np.ndarray:
        return self.size * (self.size - 1)

    @staticmethod
    def concatenate(parts: list["BoxGroups"]) -> "BoxGroups":
        if not parts:
            empty = np.zeros(0, dtype=np.int64)
            return BoxGroups(
                value_index=empty, i=empty, j=empty, k=empty, size=empty, strict_pairs=empty
            )
        return BoxGroups(
            **{
                name: np.concatenate([getattr(part, name) for part in parts])
                for name in ("value_index", "i", "j", "k", "size", "strict_pairs")
            }
        )


def _square_sums(group: np.ndarray, sub: np.ndarray, sub_size: int, group_count: int) -> np.ndarray:
    """
    For each group, the sum over sub-keys of (members sharing the sub-key)^2.
    """
    composite = group * sub_size + sub
    unique, counts = np.unique(composite, return_counts=True)
    sums = np.bincount(unique // sub_size, weights=counts * counts, minlength=group_count)
    return np.rint(sums).astype(np.int64)


def iter_box_groups(
    g: GroundData,
    instance: ScaledInstance,
    keys: np.ndarray,
    with_strict: bool = True,
) -> Iterator[BoxGroups]:
    """
    Group every slab of the grid on (value, j, k).

    Args:
        g (GroundData):
            The instance; its t fixes the boxes.
        instance (ScaledInstance):
            Scaled ground sets of g.
        keys (np.ndarray):
            Sorted image keys from image_keys.
        with_strict (bool):
            Also compute strict pair counts by inclusion-exclusion
            over coordinate collisions.
    """
    n, t = g.n, g.t
    labels = g.segments.labels()
    j_of = np.broadcast_to(labels[:, None], (n, n)).ravel()
    k_of = np.broadcast_to(labels[None, :], (n, n)).ravel()
    b_of = np.broadcast_to(np.arange(n)[:, None], (n, n)).ravel()
    c_of = np.broadcast_to(np.arange(n)[None, :], (n, n)).ravel()

    for i, span in enumerate(g.segments.ranges(), start=1):
        rows = span.stop - span.start
        slab = instance.keys_for_rows(slice(span.start, span.stop)).ravel()
        rank = np.searchsorted(keys, slab).astype(np.int64)
        j = np.tile(j_of, rows)
        k = np.tile(k_of, rows)
        composite = (rank * t + j) * t + k
        unique, inverse, counts = np.unique(composite, return_inverse=True, return_counts=True)
        inverse = inverse.ravel()
        group_count = len(unique)
        size = counts.astype(np.int64)

        if with_strict:
            a_local = np.repeat(np.arange(rows, dtype=np.int64), n * n)
            b = np.tile(b_of, rows)
            c = np.tile(c_of, rows)
            same_a = _square_sums(inverse, a_local, rows, group_count)
            same_b = _square_sums(inverse, b, n, group_count)
            same_c = _square_sums(inverse, c, n, group_count)
            same_ab = _square_sums(inverse, a_local * n + b, rows * n, group_count)
            same_ac = _square_sums(inverse, a_local * n + c, rows * n, group_count)
            same_bc = _square_sums(inverse, b * n + c, n * n, group_count)
            # Pairs sharing all three coordinates are the m identical pairs.
            strict = (
                size * size - same_a - same_b - same_c + same_ab + same_ac + same_bc - size
            )
        else:
            strict = np.zeros(group_count, dtype=np.int64)

        box_k = unique % t
        rest = unique // t
        logger.debug("Slab %d: %d cells in %d groups", i, len(slab), group_count)
        yield BoxGroups(
            value_index=rest // t,
            i=np.full(group_count, i, dtype=np.int64),
            j=rest % t + 1,
            k=box_k + 1,
            size=size,
            strict_pairs=strict,
        )
