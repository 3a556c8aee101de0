"""
Counting the proximity quadruple set Q by grouping on (d, i, j, k).
"""

import logging
from collections.abc import Iterable

from .data_types import QuadrupleMode, QuadrupleStats
from .engine import BoxGroups, image_keys, iter_box_groups, scale_instance
from .ground_data import GroundData
from .level_sets import LevelSets

logger = logging.getLogger(__name__)


def count_Q(
    g: GroundData,
    mode: QuadrupleMode | str = QuadrupleMode.STRICT,
    with_table: bool = False,
    levels: LevelSets | None = None,
) -> QuadrupleStats:
    """
    Count ordered pairs of triples with equal f-value in a common box.

    Args:
        g (GroundData):
            The instance.
        mode (QuadrupleMode | str):
            "strict" requires a != a', b != b', c != c' (and also fills
            the relaxed count); "relaxed" only requires distinct triples.
        with_table (bool):
            Keep the per-d, per-box contribution table.
        levels (LevelSets | None):
            Level sets of g, reused instead of regrouping the grid.

    Returns:
        QuadrupleStats:
            The counts, never obtained by enumerating quadruples.
    """
    mode = QuadrupleMode(mode)
    with_strict = mode is QuadrupleMode.STRICT

    if levels is not None and levels.t == g.t:
        groups: Iterable[BoxGroups] = [levels.boxes]
    else:
        instance = scale_instance(g)
        groups = iter_box_groups(g, instance, image_keys(instance), with_strict=with_strict)

    relaxed, strict_total = 0, 0
    parts: list[BoxGroups] = []
    for part in groups:
        relaxed += int(part.relaxed_pairs.sum())
        strict_total += int(part.strict_pairs.sum())
        if with_table:
            parts.append(part)
    strict = strict_total if with_strict else None
    logger.debug("n=%d t=%d: strict %s, relaxed %d", g.n, g.t, strict, relaxed)
    return QuadrupleStats(
        mode=mode,
        strict_ordered=strict,
        relaxed_ordered=relaxed,
        table=BoxGroups.concatenate(parts) if with_table else None,
    )
