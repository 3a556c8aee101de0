"""
由用户显式给出的集合。
"""

from fractions import Fraction
from pathlib import Path

from pydantic import BaseModel, Field, field_validator

from proxbound.common.data_types import PreconditionError
from proxbound.exact_core import parse_scalar
from proxbound.harness.data_types import Rational
from proxbound.harness.random_source import SplitMix64

from .set_generator import SetGenerator


def read_values(path: str | Path) -> list[Fraction]:
    """
    读取以空白或逗号分隔的有理数，# 之后为注释。
    """
    values = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        for token in line.split("#", 1)[0].replace(",", " ").split():
            values.append(parse_scalar(token))
    return values


class ExplicitSetGeneratorParams(BaseModel):
    """
    ExplicitSetGenerator 的参数。

    Attributes:
        values (list[Fraction]):
            集合元素，互不相同。
    """

    values: list[Rational] = Field(..., description="The elements", min_length=1)

    @field_validator("values")
    @classmethod
    def _distinct(cls, values: list[Fraction]) -> list[Fraction]:
        seen: set[Fraction] = set()
        for value in values:
            if value in seen:
                raise PreconditionError(f"Duplicate element {value} in explicit input")
            seen.add(value)
        return values


class ExplicitSetGenerator(SetGenerator):
    """
    取给定元素中的前 n 个。
    """

    def __init__(self, params: ExplicitSetGeneratorParams):
        self._values = tuple(params.values)

    def generate(self, n: int, rng: SplitMix64) -> tuple[Fraction, ...]:
        if n > len(self._values):
            raise PreconditionError(
                f"Explicit input has {len(self._values)} elements, {n} requested"
            )
        return tuple(sorted(self._values[:n]))
