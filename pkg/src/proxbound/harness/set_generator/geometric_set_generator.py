"""
等比集合 {first * ratio^i}，以精确有理数表示。
"""

from fractions import Fraction

from pydantic import BaseModel, Field, model_validator

from proxbound.harness.data_types import Rational
from proxbound.harness.random_source import SplitMix64

from .set_generator import SetGenerator


class GeometricSetGeneratorParams(BaseModel):
    """
    GeometricSetGenerator 的参数。

    Attributes:
        first (Fraction):
            首项，非零（默认值: 1）。
        ratio (Fraction):
            公比，正数且不等于 1（默认值: 2）。
    """

    first: Rational = Field(Fraction(1), description="First element, nonzero")
    ratio: Rational = Field(Fraction(2), description="Common ratio, positive and not 1")

    @model_validator(mode="after")
    def _distinct_terms(self) -> "GeometricSetGeneratorParams":
        if self.first == 0:
            raise ValueError("first must be nonzero")
        if self.ratio <= 0 or self.ratio == 1:
            raise ValueError("ratio must be positive and different from 1")
        return self


class GeometricSetGenerator(SetGenerator):
    def __init__(self, params: GeometricSetGeneratorParams):
        self._first = params.first
        self._ratio = params.ratio

    def generate(self, n: int, rng: SplitMix64) -> tuple[Fraction, ...]:
        return tuple(sorted(self._first * self._ratio**i for i in range(n)))
