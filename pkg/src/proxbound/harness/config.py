"""
实验配置。

配置文件有两种格式：后缀为 .yml / .yaml 时按 YAML 解析，
否则按扁平的 `key = value` 文本解析（UTF-8，# 之后为注释，
列表写作 [a, b, c]，generator.<name> 形式的键收集为生成器参数）。
"""

import logging
import os
from pathlib import Path
from typing import Any, Literal

import yaml
from pydantic import BaseModel, Field, field_validator, model_validator

from proxbound.common.data_types import GuardrailError, PreconditionError
from proxbound.exact_core import UniPoly, parse_scalar

from .data_types import Rational
from .instances import GENERATOR_KINDS

logger = logging.getLogger(__name__)

CONFIG_ENV = "PROXBOUND_CONFIG"

# 桌面级规模上限。
MAX_QUADRUPLE_N = 1024
MAX_ACCOUNTING_N = 64


class ExperimentConfig(BaseModel):
    """
    一次实验的全部参数。

    Attributes:
        phi (list[Fraction]):
            phi 的系数 [c0, c1, ..., cd]，d >= 3。
        generator (str):
            集合生成器名称。
        generator_params (dict[str, Any]):
            生成器参数。
        independent_sets (bool):
            A、B、C 是否独立生成（默认值: False，即 A = B = C）。
        n (list[int]):
            严格递增的正整数。
        s (int | None):
            重值参数；为 None 时取 8 deg(phi) + 1。
        t (int | None):
            强制的分段数；为 None 时由 choose_t 决定。
        seed (int):
            64 位种子。
        quadruples (str):
            计数 Q 的模式："strict" 同时给出两种计数，"relaxed" 只给宽松计数。
        lower_chain (bool):
            是否检查下界链。
        accounting (bool):
            是否进行曲线族上界核算。
        accounting_mode (str):
            上界核算使用的曲线族。
        s_dim (int), eps (float):
            关联界的族维数与指数松弛。
        allow_large (bool):
            是否解除桌面级规模限制。
        max_concurrency (int):
            同时计算的行数。
        output (str | None):
            输出路径；为 None 时写到标准输出。
        output_format (str):
            "csv"，或 "json"（逐行 JSON）。
    """

    phi: list[Rational] = Field(..., description="Coefficients of phi, constant first")
    generator: str = Field("arithmetic", description="Set generator name")
    generator_params: dict[str, Any] = Field(
        default_factory=dict, description="Set generator parameters"
    )
    independent_sets: bool = Field(False, description="Draw A, B, C independently")
    n: list[int] = Field(..., description="Instance sizes, increasing", min_length=1)
    s: int | None = Field(None, description="Heaviness parameter", ge=1)
    t: int | None = Field(None, description="Forced number of segments", ge=1)
    seed: int = Field(0, description="64-bit seed", ge=0, lt=2**64)
    quadruples: Literal["strict", "relaxed"] = Field(
        "strict", description="Q counting mode"
    )
    lower_chain: bool = Field(True, description="Check the lower counting chain")
    accounting: bool = Field(False, description="Run the curve-family accounting")
    accounting_mode: Literal["strict", "relaxed"] = Field(
        "strict", description="Curve family for the accounting"
    )
    s_dim: int = Field(4, description="Family dimension for the incidence bound", ge=2)
    eps: float = Field(0.0, description="Exponent slack", ge=0)
    allow_large: bool = Field(False, description="Lift the desk-scale guardrails")
    max_concurrency: int = Field(1, description="Rows computed at once", ge=1)
    output: str | None = Field(None, description="Output path")
    output_format: Literal["csv", "json"] = Field("csv", description="Output format")

    @field_validator("generator")
    @classmethod
    def _known_generator(cls, generator: str) -> str:
        if generator not in GENERATOR_KINDS:
            raise ValueError(f"Unknown SetGenerator name: {generator}")
        return generator

    @field_validator("n")
    @classmethod
    def _increasing(cls, n: list[int]) -> list[int]:
        if n[0] < 1 or any(left >= right for left, right in zip(n, n[1:])):
            raise ValueError(f"n must be positive and strictly increasing, got {n}")
        return n

    @model_validator(mode="after")
    def _phi_and_s(self) -> "ExperimentConfig":
        if self.phi_poly.degree < 3:
            raise PreconditionError(f"deg phi must be at least 3, got {self.phi_poly.degree}")
        if self.s is None:
            self.s = 8 * self.phi_poly.degree + 1
        return self

    @property
    def phi_poly(self) -> UniPoly:
        return UniPoly.of(self.phi)

    def check_guardrails(self, n: int) -> None:
        """
        规模超出桌面级限制且未设置 allow_large 时抛出 GuardrailError。
        """
        if self.allow_large:
            return
        if n > MAX_QUADRUPLE_N:
            raise GuardrailError(f"n = {n} exceeds {MAX_QUADRUPLE_N} for Q counting")
        if self.accounting and n > MAX_ACCOUNTING_N:
            raise GuardrailError(f"n = {n} exceeds {MAX_ACCOUNTING_N} for the accounting")


def parse_value(text: str) -> Any:
    text = text.strip()
    if text.startswith("[") and text.endswith("]"):
        inner = text[1:-1].strip()
        return [item.strip() for item in inner.split(",")] if inner else []
    if text.lower() in ("true", "false"):
        return text.lower() == "true"
    if text.lower() in ("none", "null", ""):
        return None
    return text


def parse_flat_config(text: str) -> dict[str, Any]:
    """
    将扁平的 `key = value` 文本解析为字典。

    Raises:
        PreconditionError:
            某一行不是 `key = value` 形式，或键重复。
    """
    data: dict[str, Any] = {}
    generator_params: dict[str, Any] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, separator, value = line.partition("=")
        key = key.strip().lower()
        if not separator or not key:
            raise PreconditionError(f"Line {number}: expected `key = value`, got {raw!r}")
        target, name = (
            (generator_params, key.removeprefix("generator."))
            if key.startswith("generator.")
            else (data, key)
        )
        if name in target:
            raise PreconditionError(f"Line {number}: duplicate key {key!r}")
        target[name] = parse_value(value)
    if generator_params:
        data["generator_params"] = generator_params
    return data


def config_to_lowercase(data: Any) -> Any:
    """递归地将嵌套结构中的所有字典键转换为小写。"""
    if isinstance(data, dict):
        return {k.lower(): config_to_lowercase(v) for k, v in data.items()}
    if isinstance(data, list):
        return [config_to_lowercase(i) for i in data]
    return data


def load_config(path: str | Path | None = None) -> ExperimentConfig:
    """
    读取配置文件；未给出路径时使用环境变量 PROXBOUND_CONFIG。
    """
    if path is None:
        path = os.getenv(CONFIG_ENV)
        if path is None:
            raise PreconditionError(f"No config file given and {CONFIG_ENV} is not set")
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise PreconditionError(f"配置文件 {path} 未找到")

    if path.suffix.lower() in (".yml", ".yaml"):
        try:
            data = yaml.safe_load(text) or {}
        except yaml.YAMLError:
            raise PreconditionError(f"配置文件 {path} 不是有效的 YAML")
        data = config_to_lowercase(data)
        # YAML 中的浮点数不是精确有理数，按字面值改写为字符串。
        if isinstance(data.get("phi"), list):
            data["phi"] = [str(c) if isinstance(c, float) else c for c in data["phi"]]
    else:
        data = parse_flat_config(text)

    config = ExperimentConfig.model_validate(data)
    logger.debug("Loaded config from %s: %s", path, config)
    return config


def phi_from_text(text: str) -> UniPoly:
    """
    解析命令行中的 phi，形如 "[0, 0, 0, 1]" 或 "0,0,0,1"。
    """
    value = parse_value(text)
    items = value if isinstance(value, list) else [item for item in text.split(",")]
    return UniPoly.of(parse_scalar(item) for item in items)
