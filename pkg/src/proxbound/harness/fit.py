"""
log |D| 对 log n 的最小二乘斜率。

这是描述性统计量，用于观察趋势，不对渐近行为做任何断言。
"""

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np

from proxbound.common.data_types import PreconditionError

from .data_types import ExperimentRow

logger = logging.getLogger(__name__)


@dataclass(frozen=True, kw_only=True)
class ExponentFit:
    """
    拟合结果。

    Attributes:
        slope (float):
            log |D| = slope * log n + intercept 中的斜率。
        intercept (float):
            截距。
        residuals (tuple[float, ...]):
            每个点的残差（观测值减拟合值），顺序与输入一致。
    """

    slope: float
    intercept: float
    residuals: tuple[float, ...]


def fit_points(points: Sequence[tuple[int, int]]) -> ExponentFit:
    """
    对 (n, |D|) 点做最小二乘拟合。

    Raises:
        PreconditionError:
            不同的 n 少于两个，或出现非正值。
    """
    if len({n for n, _ in points}) < 2:
        raise PreconditionError("Fitting needs at least two distinct n values")
    if any(n < 1 or d < 1 for n, d in points):
        raise PreconditionError("Fitting needs positive n and |D|")
    x = np.log(np.array([n for n, _ in points], dtype=np.float64))
    y = np.log(np.array([d for _, d in points], dtype=np.float64))
    slope, intercept = np.polyfit(x, y, 1)
    residuals = y - (slope * x + intercept)
    logger.debug("Fitted slope %.6f over %d points", slope, len(points))
    return ExponentFit(
        slope=float(slope),
        intercept=float(intercept),
        residuals=tuple(float(r) for r in residuals),
    )


def fit_exponent(rows: Iterable[ExperimentRow]) -> ExponentFit:
    """
    对实验结果中已计算 |D| 的行拟合斜率。
    """
    points = [(row.n, row.image_size) for row in rows if row.image_size is not None]
    return fit_points(points)
