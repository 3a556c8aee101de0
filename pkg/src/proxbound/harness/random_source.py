"""
可复现的 64 位伪随机数源。

SplitMix64 的状态转移（全部按 2^64 取模）：

    state = state + 0x9E3779B97F4A7C15
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    output = z ^ (z >> 31)

区间内的整数通过拒绝采样得到，因此没有取模偏差；
不同实现只要遵循上述定义即可得到逐位相同的序列。
"""

from proxbound.common.data_types import PreconditionError

_MASK = (1 << 64) - 1
_GOLDEN_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    """
    SplitMix64 生成器。
    """

    def __init__(self, seed: int):
        """
        Args:
            seed (int):
                64 位种子，超出范围的部分按 2^64 取模。
        """
        self._state = seed & _MASK

    @property
    def state(self) -> int:
        return self._state

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN_GAMMA) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """
        [0, bound) 上的均匀整数。
        """
        if not 1 <= bound <= _MASK + 1:
            raise PreconditionError(f"bound must lie in [1, 2^64], got {bound}")
        # 丢弃落在最后一个不完整区间中的输出。
        limit = (_MASK + 1) - (_MASK + 1) % bound
        while True:
            value = self.next_u64()
            if value < limit:
                return value % bound

    def integer(self, low: int, high: int) -> int:
        """
        [low, high] 上的均匀整数。
        """
        if low > high:
            raise PreconditionError(f"Empty range [{low}, {high}]")
        return low + self.below(high - low + 1)

    def sample_distinct(self, low: int, high: int, count: int) -> list[int]:
        """
        从 [low, high] 中无放回地抽取 count 个整数（Floyd 算法），升序返回。
        """
        size = high - low + 1
        if count < 0 or count > size:
            raise PreconditionError(
                f"Cannot draw {count} distinct integers from [{low}, {high}]"
            )
        chosen: set[int] = set()
        for top in range(size - count, size):
            pick = self.below(top + 1)
            chosen.add(top if pick in chosen else pick)
        return sorted(low + offset for offset in chosen)
