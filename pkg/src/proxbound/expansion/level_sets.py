"""
Image set D, level sets G_d, heavy values D' and occupied boxes.
"""

import logging
from collections.abc import Iterator, Set
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from proxbound.common.data_types import CheckFailure, PreconditionError
from proxbound.exact_core import ScalarLike, to_scalar

from .data_types import BoxIndex, HeavyValues
from .engine import BoxGroups, ScaledInstance, image_keys, iter_box_groups, scale_instance
from .ground_data import GroundData

logger = logging.getLogger(__name__)


class ImageSet(Set):
    """
    The exact set D = f(A, B, C), stored as sorted integer keys.
    """

    def __init__(self, keys: np.ndarray, instance: ScaledInstance):
        self._keys = keys
        self._instance = instance

    @property
    def keys(self) -> np.ndarray:
        return self._keys

    @property
    def instance(self) -> ScaledInstance:
        return self._instance

    def __len__(self) -> int:
        return len(self._keys)

    def __iter__(self) -> Iterator[Fraction]:
        for key in self._keys:
            yield self._instance.value_of(key)

    def __contains__(self, value: object) -> bool:
        try:
            self.index_of(value)  # type: ignore[arg-type]
        except PreconditionError:
            return False
        return True

    def value_at(self, index: int) -> Fraction:
        return self._instance.value_of(self._keys[index])

    def index_of(self, value: ScalarLike) -> int:
        """
        Position of value in the sorted image; unknown values are rejected.
        """
        key = self._instance.key_of(to_scalar(value))
        if key is not None and 0 <= key and (
            not self._instance.exact_int64 or key < 2**63
        ):
            position = int(np.searchsorted(self._keys, key))
            if position < len(self._keys) and self._keys[position] == key:
                return position
        raise PreconditionError(f"{value} is not a value of f on the grid")


def image_set(g: GroundData) -> ImageSet:
    """
    Compute D = f(A, B, C) exactly.
    """
    instance = scale_instance(g)
    image = ImageSet(image_keys(instance), instance)
    logger.debug("n=%d: |D| = %d", g.n, len(image))
    return image


@dataclass(frozen=True, kw_only=True)
class LevelSets:
    """
    Level sets G_d with their per-box sub-counts.

    Attributes:
        image (ImageSet):
            D; value indices below refer to its sorted order.
        n, t, s (int):
            Instance parameters.
        sizes (np.ndarray):
            |G_d| per value index.
        boxes (BoxGroups):
            Every nonempty G_d ∩ box, sorted by (value, i, j, k).
    """

    image: ImageSet
    n: int
    t: int
    s: int
    sizes: np.ndarray
    boxes: BoxGroups

    def __len__(self) -> int:
        return len(self.image)

    @property
    def total(self) -> int:
        return int(self.sizes.sum())

    def size_of(self, d: ScalarLike) -> int:
        return int(self.sizes[self.image.index_of(d)])

    def box_span(self, index: int) -> slice:
        start = int(np.searchsorted(self.boxes.value_index, index, side="left"))
        stop = int(np.searchsorted(self.boxes.value_index, index, side="right"))
        return slice(start, stop)

    def box_counts(self, index: int) -> dict[BoxIndex, int]:
        span = self.box_span(index)
        return {
            BoxIndex(int(i), int(j), int(k)): int(m)
            for i, j, k, m in zip(
                self.boxes.i[span], self.boxes.j[span], self.boxes.k[span], self.boxes.size[span]
            )
        }

    def occupied_counts(self) -> np.ndarray:
        """
        Number of occupied boxes per value index.
        """
        return np.bincount(self.boxes.value_index, minlength=len(self.image))


def level_sets(g: GroundData) -> LevelSets:
    """
    Group all n^3 triples by exact value and box.
    """
    image = image_set(g)
    parts = list(iter_box_groups(g, image.instance, image.keys))
    boxes = BoxGroups.concatenate(parts)
    order = np.argsort(boxes.value_index, kind="stable")
    boxes = BoxGroups(
        value_index=boxes.value_index[order],
        i=boxes.i[order],
        j=boxes.j[order],
        k=boxes.k[order],
        size=boxes.size[order],
        strict_pairs=boxes.strict_pairs[order],
    )
    sizes = np.rint(
        np.bincount(boxes.value_index, weights=boxes.size, minlength=len(image))
    ).astype(np.int64)
    levels = LevelSets(image=image, n=g.n, t=g.t, s=g.s, sizes=sizes, boxes=boxes)
    if levels.total != g.n**3:
        raise CheckFailure(
            "Level sets do not partition the grid",
            {"n": g.n, "total": levels.total},
        )
    return levels


def heavy_values(ls: LevelSets) -> HeavyValues:
    """
    D' = {d : |G_d| >= n^3 / (10 |D|)}, compared in integers.
    """
    n_cubed = ls.n**3
    d_size = len(ls.image)
    heavy = np.nonzero(10 * d_size * ls.sizes >= n_cubed)[0]
    result = HeavyValues(
        indices=tuple(int(index) for index in heavy),
        threshold=Fraction(n_cubed, 10 * d_size),
        mass=int(ls.sizes[heavy].sum()),
        n=ls.n,
    )
    if not result.holds:
        raise CheckFailure(
            "Heavy values carry less than 9/10 of the grid",
            {"n": ls.n, "image_size": d_size, "mass": result.mass},
        )
    return result


def occupied_boxes(ls: LevelSets, d: ScalarLike) -> dict[BoxIndex, int]:
    """
    Boxes meeting G_d, with |G_d ∩ box|.
    """
    return ls.box_counts(ls.image.index_of(d))
