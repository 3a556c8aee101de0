"""
Data types for image sets, quadruple counts and the lower counting chain.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, NamedTuple

from proxbound.exact_core import format_scalar

from .engine import BoxGroups


class BoxIndex(NamedTuple):
    """
    1-based segment indices (i, j, k) of the box A_i x B_j x C_k.
    """

    i: int
    j: int
    k: int


class QuadrupleMode(Enum):
    STRICT = "strict"
    RELAXED = "relaxed"


@dataclass(frozen=True, kw_only=True)
class QuadrupleStats:
    """
    Ordered counts of pairs of triples with equal f-value in a common box.

    Attributes:
        mode (QuadrupleMode):
            Strict counting also fills relaxed_ordered; relaxed
            counting leaves strict_ordered as None.
        strict_ordered (int | None):
            Pairs with a != a', b != b' and c != c' (the set Q).
        relaxed_ordered (int):
            Pairs of distinct triples.
        table (BoxGroups | None):
            Per-d, per-box contributions when requested.
    """

    mode: QuadrupleMode
    strict_ordered: int | None
    relaxed_ordered: int
    table: BoxGroups | None = field(default=None, repr=False, compare=False)

    @property
    def count(self) -> int:
        if self.mode is QuadrupleMode.STRICT:
            assert self.strict_ordered is not None
            return self.strict_ordered
        return self.relaxed_ordered

    @property
    def relaxed_unordered(self) -> int:
        return self.relaxed_ordered // 2

    @property
    def strict_unordered(self) -> int | None:
        return None if self.strict_ordered is None else self.strict_ordered // 2


@dataclass(frozen=True, kw_only=True)
class HeavyValues:
    """
    D' = {d : |G_d| >= n^3 / (10 |D|)} with its total mass.
    """

    indices: tuple[int, ...]
    threshold: Fraction
    mass: int
    n: int

    def __len__(self) -> int:
        return len(self.indices)

    @property
    def mass_floor(self) -> Fraction:
        return Fraction(9 * self.n**3, 10)

    @property
    def holds(self) -> bool:
        return 10 * self.mass >= 9 * self.n**3


@dataclass(frozen=True, kw_only=True)
class LowerChainReport:
    """
    Every quantity of the lower counting chain on one instance.

    Attributes:
        n, t, s, image_size (int):
            Instance parameters and |D|.
        heavy_count, heavy_mass (int):
            |D'| and the sum of |G_d| over D'.
        heavy_holds (bool), heavy_slack (Fraction):
            Sum over D' of |G_d| against (9/10) n^3; always holds.
        per_value_ok, per_value_failed (int):
            Values d in D' with / without sum over T_d' of |G_d ∩ box| >= |G_d| / 2.
        per_value_min_slack (Fraction | None):
            Smallest (sum over T_d' - |G_d| / 2) over D'.
        heavy_box_mass (int):
            Sum over d in D' and boxes in T_d' of |G_d ∩ box|.
        binomial_pairs (int):
            Sum over d in D', boxes in T_d' of C(m, 2).
        binomial_floor (Fraction):
            ((s - 1) / 2) * heavy_box_mass; binomial_pairs is never below it.
        fifth_floor (Fraction), fifth_holds (bool):
            binomial_pairs against (s / 5) * heavy_mass.
        relaxed_ordered (int):
            Ordered relaxed Q count.
        final_floor (Fraction), final_slack (Fraction), final_holds (bool):
            relaxed_ordered / 2 against (9/50) s n^3.
        max_occupied_ratio (Fraction):
            max over d of |occupied boxes of d| / t^2.
    """

    n: int
    t: int
    s: int
    image_size: int
    heavy_count: int
    heavy_mass: int
    heavy_holds: bool
    heavy_slack: Fraction
    per_value_ok: int
    per_value_failed: int
    per_value_min_slack: Fraction | None
    heavy_box_mass: int
    binomial_pairs: int
    binomial_floor: Fraction
    fifth_floor: Fraction
    fifth_holds: bool
    relaxed_ordered: int
    final_floor: Fraction
    final_slack: Fraction
    final_holds: bool
    max_occupied_ratio: Fraction

    def to_dict(self) -> dict[str, Any]:
        result: dict[str, Any] = {}
        for name, value in self.__dict__.items():
            if isinstance(value, Fraction):
                result[name] = format_scalar(value)
            else:
                result[name] = value
        return result


@dataclass(frozen=True, kw_only=True)
class SzBound:
    """
    Incidence bound terms with unit leading constants.

    term1 = m^(2s/(5s-4)) * n^((5s-6)/(5s-4) + eps)
    term2 = m^(2/3) * n^(2/3) + m + n
    """

    term1: float
    term2: float

    @property
    def total(self) -> float:
        return self.term1 + self.term2
