"""
harness 的数据类型：精确有理数字段与实验结果行。
"""

from dataclasses import dataclass, fields
from fractions import Fraction
from typing import Annotated, Any

from pydantic import PlainSerializer, PlainValidator

from proxbound.exact_core import format_scalar, to_scalar

# pydantic 字段中的精确有理数：接受整数、Fraction 或 "p/q" 字符串，拒绝浮点数。
Rational = Annotated[
    Fraction,
    PlainValidator(to_scalar),
    PlainSerializer(format_scalar, return_type=str),
]

APPROX_DIGITS = 12


def approx(value: float | None) -> float | None:
    """
    保留 12 位有效数字，使序列化后再解析得到同一个浮点数。
    """
    if value is None:
        return None
    return float(f"{value:.{APPROX_DIGITS}g}")


@dataclass(frozen=True, kw_only=True)
class ExperimentRow:
    """
    单个 n 的实验结果；字段顺序即 CSV 列顺序。

    除 *_approx 列外均为精确值；未计算的量为 None。
    error 记录该行的失败原因，此时其余字段可能不完整。
    """

    n: int
    image_size: int | None = None
    t: int | None = None
    s: int | None = None
    p_size: int | None = None
    family_size: int | None = None
    q_strict: int | None = None
    q_relaxed: int | None = None
    heavy_count: int | None = None
    heavy_slack: Fraction | None = None
    per_value_failed: int | None = None
    fifth_holds: bool | None = None
    final_floor: Fraction | None = None
    final_slack: Fraction | None = None
    final_holds: bool | None = None
    max_occupied_ratio: Fraction | None = None
    gamma0_size: int | None = None
    q_exceptional: int | None = None
    q_residual: int | None = None
    incidences: int | None = None
    exceptional_holds: bool | None = None
    residual_holds: bool | None = None
    cross_check_ok: bool | None = None
    p_ratio_approx: float | None = None
    family_ratio_approx: float | None = None
    sz_bound_approx: float | None = None
    implied_image_floor_approx: float | None = None
    error: str | None = None
    wall_time_approx: float | None = None

    @property
    def failed_check(self) -> bool:
        """
        是否出现断言类检查失败（对应退出码 2）。
        """
        if self.error is not None and self.error.startswith("check:"):
            return True
        return any(
            flag is False
            for flag in (self.exceptional_holds, self.residual_holds, self.cross_check_ok)
        )

    def to_dict(self) -> dict[str, Any]:
        return {column: getattr(self, column) for column in CSV_COLUMNS}


CSV_COLUMNS: tuple[str, ...] = tuple(f.name for f in fields(ExperimentRow))

TIMING_COLUMNS: tuple[str, ...] = ("wall_time_approx",)


@dataclass(frozen=True, kw_only=True)
class ExperimentResult:
    """
    按配置中 n 的顺序排列的实验结果。
    """

    rows: tuple[ExperimentRow, ...]

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def failed_check(self) -> bool:
        return any(row.failed_check for row in self.rows)
