"""
proxbound 的通用数据类型与异常层次。
"""

from typing import Any


class ProxboundError(Exception):
    """
    proxbound 所有异常的基类。
    """


class PreconditionError(ProxboundError, ValueError):
    """
    当操作的前置条件不满足时抛出此异常，
    例如零多项式求 gcd、deg φ < 3、t > |X| 或未知的取值 d。
    """


class IrrationalNormalizerError(PreconditionError):
    """
    共线三元组的归一化需要无理数旋转时抛出此异常。
    """


class GuardrailError(ProxboundError):
    """
    实例规模超出桌面级限制且未传入覆盖标志时抛出此异常。
    """


class CheckFailure(ProxboundError):
    """
    断言类检查失败时抛出此异常。

    Attributes:
        counterexample (dict[str, Any]):
            描述失败实例的结构化反例。
    """

    def __init__(self, message: str, counterexample: dict[str, Any] | None = None):
        super().__init__(message)
        self.counterexample: dict[str, Any] = dict(counterexample or {})
