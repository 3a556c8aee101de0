from .bounds import (
    expansion_exponent,
    implied_image_floor,
    sz_bound,
    szemeredi_trotter_bound,
    upper_q_estimate,
)
from .data_types import (
    BoxIndex,
    HeavyValues,
    LowerChainReport,
    QuadrupleMode,
    QuadrupleStats,
    SzBound,
)
from .engine import BoxGroups, ScaledInstance, scale_instance
from .ground_data import (
    GroundData,
    Segments,
    choose_t,
    eval_f,
    partition_consecutive,
    related,
)
from .interval import Interval, f_enclosure, poly_enclosure
from .level_sets import (
    ImageSet,
    LevelSets,
    heavy_values,
    image_set,
    level_sets,
    occupied_boxes,
)
from .lower_chain import verify_lower_chain
from .quadruples import count_Q
from .surface_boxes import box_enclosures, max_surface_ratio, surface_boxes

__all__ = [
    "BoxGroups",
    "BoxIndex",
    "GroundData",
    "HeavyValues",
    "ImageSet",
    "Interval",
    "LevelSets",
    "LowerChainReport",
    "QuadrupleMode",
    "QuadrupleStats",
    "ScaledInstance",
    "Segments",
    "SzBound",
    "box_enclosures",
    "choose_t",
    "count_Q",
    "eval_f",
    "expansion_exponent",
    "f_enclosure",
    "heavy_values",
    "image_set",
    "implied_image_floor",
    "level_sets",
    "max_surface_ratio",
    "occupied_boxes",
    "partition_consecutive",
    "poly_enclosure",
    "related",
    "scale_instance",
    "surface_boxes",
    "sz_bound",
    "szemeredi_trotter_bound",
    "upper_q_estimate",
    "verify_lower_chain",
]
