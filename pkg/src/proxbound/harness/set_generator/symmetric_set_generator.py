"""
关于 0 对称的集合，用于触发奇次 phi 的 x + x' 例外分量。
"""

from fractions import Fraction

from pydantic import BaseModel, Field, field_validator

from proxbound.harness.data_types import Rational
from proxbound.harness.random_source import SplitMix64

from .set_generator import SetGenerator


class SymmetricSetGeneratorParams(BaseModel):
    """
    SymmetricSetGenerator 的参数。

    Attributes:
        step (Fraction):
            相邻元素的间距，正数（默认值: 1）。
    """

    step: Rational = Field(Fraction(1), description="Spacing, positive")

    @field_validator("step")
    @classmethod
    def _positive(cls, step: Fraction) -> Fraction:
        if step <= 0:
            raise ValueError("step must be positive")
        return step


class SymmetricSetGenerator(SetGenerator):
    """
    n 为偶数时生成 {+-step, ..., +-(n/2) step}；n 为奇数时再加入 0。
    """

    def __init__(self, params: SymmetricSetGeneratorParams):
        self._step = params.step

    def generate(self, n: int, rng: SplitMix64) -> tuple[Fraction, ...]:
        half = [self._step * i for i in range(1, n // 2 + 1)]
        middle = [Fraction(0)] if n % 2 else []
        return tuple([-v for v in reversed(half)] + middle + half)
