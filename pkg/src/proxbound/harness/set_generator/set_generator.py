"""
实例集合生成器的抽象基类。
"""

from abc import ABC, abstractmethod
from fractions import Fraction

from proxbound.harness.random_source import SplitMix64


class SetGenerator(ABC):
    """
    生成 n 元有理数集合的抽象基类。
    """

    @abstractmethod
    def generate(self, n: int, rng: SplitMix64) -> tuple[Fraction, ...]:
        """
        生成一个 n 元集合。

        Args:
            n (int):
                集合大小，至少为 1。
            rng (SplitMix64):
                随机源；确定性生成器不消耗它。

        Returns:
            tuple[Fraction, ...]:
                严格递增的 n 个元素。
        """
        raise NotImplementedError
