"""
区间内均匀抽取的互不相同的整数。
"""

from fractions import Fraction

from pydantic import BaseModel, Field

from proxbound.harness.random_source import SplitMix64

from .set_generator import SetGenerator


class RandomIntegerSetGeneratorParams(BaseModel):
    """
    RandomIntegerSetGenerator 的参数。

    Attributes:
        low (int):
            区间下端（含）（默认值: 1）。
        high (int | None):
            区间上端（含）；为 None 时取 low + 4n^2 - 1。
    """

    low: int = Field(1, description="Smallest admissible integer")
    high: int | None = Field(None, description="Largest admissible integer")


class RandomIntegerSetGenerator(SetGenerator):
    def __init__(self, params: RandomIntegerSetGeneratorParams):
        self._low = params.low
        self._high = params.high

    def generate(self, n: int, rng: SplitMix64) -> tuple[Fraction, ...]:
        high = self._high if self._high is not None else self._low + 4 * n * n - 1
        return tuple(Fraction(v) for v in rng.sample_distinct(self._low, high, n))
