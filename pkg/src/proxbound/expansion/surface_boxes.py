"""
Boxes whose interval enclosure of f contains a value d.

The enclosure is taken over the real hull of each box, so every box
holding a grid triple with f = d is reported.
"""

import logging
from fractions import Fraction
from math import ceil, floor

import numpy as np

from proxbound.exact_core import ScalarLike, to_scalar

from .data_types import BoxIndex
from .ground_data import GroundData
from .interval import Interval, f_enclosure
from .level_sets import ImageSet

logger = logging.getLogger(__name__)

_INT64_MAX = 2**63 - 1


def _hulls(elements: tuple[Fraction, ...], g: GroundData) -> list[Interval]:
    return [Interval(elements[span.start], elements[span.stop - 1]) for span in g.segments.ranges()]


def box_enclosures(g: GroundData) -> dict[BoxIndex, Interval]:
    """
    Range enclosure of f over each box A_i x B_j x C_k.
    """
    a_hulls, b_hulls, c_hulls = _hulls(g.a, g), _hulls(g.b, g), _hulls(g.c, g)
    return {
        BoxIndex(i, j, k): f_enclosure(x, y, z, g.phi)
        for i, x in enumerate(a_hulls, start=1)
        for j, y in enumerate(b_hulls, start=1)
        for k, z in enumerate(c_hulls, start=1)
    }


def surface_boxes(
    g: GroundData,
    d: ScalarLike,
    enclosures: dict[BoxIndex, Interval] | None = None,
) -> set[BoxIndex]:
    """
    Superset of the boxes meeting the surface f = d.
    """
    d = to_scalar(d)
    if enclosures is None:
        enclosures = box_enclosures(g)
    return {box for box, enclosure in enclosures.items() if d in enclosure}


def max_surface_ratio(
    g: GroundData,
    image: ImageSet,
    enclosures: dict[BoxIndex, Interval] | None = None,
) -> Fraction:
    """
    max over d in D of |surface_boxes(d)| / t^2.

    Each enclosure becomes an integer key range [ceil(lo L^2), floor(hi L^2)];
    the number of ranges containing a key is (#lo <= key) - (#hi < key).
    """
    if enclosures is None:
        enclosures = box_enclosures(g)
    square = image.instance.scale**2
    lows = [ceil(e.lo * square) for e in enclosures.values()]
    highs = [floor(e.hi * square) for e in enclosures.values()]
    if image.instance.exact_int64:
        # Keys are nonnegative int64; clipping keeps every comparison unchanged.
        lows = [min(max(v, -1), _INT64_MAX) for v in lows]
        highs = [min(max(v, -1), _INT64_MAX) for v in highs]
        dtype: type | str = np.int64
    else:
        dtype = object
    low_keys = np.sort(np.array(lows, dtype=dtype))
    high_keys = np.sort(np.array(highs, dtype=dtype))
    counts = np.searchsorted(low_keys, image.keys, side="right") - np.searchsorted(
        high_keys, image.keys, side="left"
    )
    best = int(counts.max()) if len(counts) else 0
    logger.debug("Max surface boxes %d over t^2 = %d", best, g.t**2)
    return Fraction(best, g.t**2)
