"""
等差集合 {start + i * step}。
"""

from fractions import Fraction

from pydantic import BaseModel, Field, field_validator

from proxbound.harness.data_types import Rational
from proxbound.harness.random_source import SplitMix64

from .set_generator import SetGenerator


class ArithmeticSetGeneratorParams(BaseModel):
    """
    ArithmeticSetGenerator 的参数。

    Attributes:
        start (Fraction):
            首项（默认值: 1）。
        step (Fraction):
            公差，非零（默认值: 1）。
    """

    start: Rational = Field(Fraction(1), description="First element")
    step: Rational = Field(Fraction(1), description="Common difference, nonzero")

    @field_validator("step")
    @classmethod
    def _nonzero(cls, step: Fraction) -> Fraction:
        if step == 0:
            raise ValueError("step must be nonzero")
        return step


class ArithmeticSetGenerator(SetGenerator):
    def __init__(self, params: ArithmeticSetGeneratorParams):
        self._start = params.start
        self._step = params.step

    def generate(self, n: int, rng: SplitMix64) -> tuple[Fraction, ...]:
        return tuple(sorted(self._start + i * self._step for i in range(n)))
