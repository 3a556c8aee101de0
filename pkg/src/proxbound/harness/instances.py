"""
按生成器名称构造实例 A、B、C。
"""

import logging
from typing import Any

from proxbound.common.data_types import PreconditionError
from proxbound.exact_core import UniPoly
from proxbound.expansion import GroundData

from .random_source import SplitMix64
from .set_generator import SetGeneratorBuilder

logger = logging.getLogger(__name__)

GENERATOR_KINDS = ("arithmetic", "geometric", "random-integer", "symmetric", "explicit-file")

CUBE = UniPoly.monomial(3)


def generate_sets(
    kind: str,
    n: int,
    seed: int,
    params: dict[str, Any] | None = None,
    phi: UniPoly = CUBE,
    s: int = 1,
    t: int = 1,
    independent: bool = False,
) -> GroundData:
    """
    生成实例，对 (kind, n, seed, params) 完全确定。

    Args:
        kind (str):
            生成器名称，见 GENERATOR_KINDS。
        n (int):
            每个集合的大小。
        seed (int):
            SplitMix64 的种子。
        params (dict[str, Any] | None):
            生成器参数。
        phi (UniPoly):
            实例的多项式（默认值: x^3）。
        s, t (int):
            写入 GroundData 的参数。
        independent (bool):
            为 True 时 A、B、C 依次从同一随机流中独立生成；
            否则 A = B = C。

    Returns:
        GroundData:
            生成的实例。

    Raises:
        PreconditionError:
            n < 1，生成器参数无效，或显式集合文件无法读取。
    """
    if n < 1:
        raise PreconditionError(f"n must be positive, got {n}")
    try:
        generator = SetGeneratorBuilder.build(kind, dict(params or {}), {})
    except PreconditionError:
        raise
    except (ValueError, OSError) as e:
        raise PreconditionError(f"Invalid {kind} generator parameters: {e}") from e
    rng = SplitMix64(seed)
    a = generator.generate(n, rng)
    if independent:
        b = generator.generate(n, rng)
        c = generator.generate(n, rng)
    else:
        b = c = a
    logger.debug("Generated %s sets of size %d (seed %d)", kind, n, seed)
    return GroundData.of(a, b, c, phi, s=s, t=t)
