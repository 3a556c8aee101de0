"""
Instance-level check of the lower counting chain for |Q|.
"""

import logging
from fractions import Fraction

import numpy as np

from .data_types import LowerChainReport
from .ground_data import GroundData
from .level_sets import LevelSets, heavy_values, level_sets

logger = logging.getLogger(__name__)


def verify_lower_chain(g: GroundData, levels: LevelSets | None = None) -> LowerChainReport:
    """
    Compute every quantity of the lower chain and check each step.

    Steps:
        (a) sum over D' of |G_d| >= (9/10) n^3, which always holds;
        (b) for each d in D', the boxes of T_d' carry at least |G_d| / 2,
            which depends on s and t and is reported per value;
        binomial: sum of C(m, 2) over T_d' >= ((s - 1) / 2) * sum of m;
        fifth: the same sum against (s / 5) * sum over D' of |G_d|;
        (c) relaxed_ordered / 2 >= (9/50) s n^3, reported with slack.

    Args:
        g (GroundData):
            The instance.
        levels (LevelSets | None):
            Level sets of g, when already computed.

    Returns:
        LowerChainReport:
            Quantities, pass/fail flags and slacks.
    """
    if levels is None or levels.t != g.t:
        levels = level_sets(g)
    n, s, t = g.n, g.s, g.t
    heavy = heavy_values(levels)

    boxes = levels.boxes
    is_heavy = np.zeros(len(levels.image), dtype=bool)
    is_heavy[list(heavy.indices)] = True
    in_t_prime = is_heavy[boxes.value_index] & (boxes.size >= s)

    heavy_sizes = boxes.size[in_t_prime]
    heavy_box_mass = int(heavy_sizes.sum())
    binomial_pairs = int((heavy_sizes * (heavy_sizes - 1) // 2).sum())
    per_value_mass = np.rint(
        np.bincount(
            boxes.value_index[in_t_prime],
            weights=heavy_sizes,
            minlength=len(levels.image),
        )
    ).astype(np.int64)

    heavy_index = np.array(heavy.indices, dtype=np.int64)
    doubled_slack = 2 * per_value_mass[heavy_index] - levels.sizes[heavy_index]
    per_value_ok = int((doubled_slack >= 0).sum())
    min_slack = Fraction(int(doubled_slack.min()), 2) if len(doubled_slack) else None

    relaxed_ordered = int(boxes.relaxed_pairs.sum())
    final_floor = Fraction(9 * s * n**3, 50)
    final_slack = Fraction(relaxed_ordered, 2) - final_floor
    fifth_floor = Fraction(s, 5) * heavy.mass

    occupied = levels.occupied_counts()
    report = LowerChainReport(
        n=n,
        t=t,
        s=s,
        image_size=len(levels.image),
        heavy_count=len(heavy),
        heavy_mass=heavy.mass,
        heavy_holds=heavy.holds,
        heavy_slack=heavy.mass - heavy.mass_floor,
        per_value_ok=per_value_ok,
        per_value_failed=len(heavy) - per_value_ok,
        per_value_min_slack=min_slack,
        heavy_box_mass=heavy_box_mass,
        binomial_pairs=binomial_pairs,
        binomial_floor=Fraction(s - 1, 2) * heavy_box_mass,
        fifth_floor=fifth_floor,
        fifth_holds=binomial_pairs >= fifth_floor,
        relaxed_ordered=relaxed_ordered,
        final_floor=final_floor,
        final_slack=final_slack,
        final_holds=final_slack >= 0,
        max_occupied_ratio=Fraction(int(occupied.max()) if len(occupied) else 0, t * t),
    )
    logger.debug(
        "Lower chain n=%d t=%d s=%d: %d/%d heavy values pass, final slack %s",
        n,
        t,
        s,
        per_value_ok,
        len(heavy),
        final_slack,
    )
    return report
