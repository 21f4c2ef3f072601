"""
有理数工具模块
"""

import math
from collections.abc import Sequence
from fractions import Fraction
from numbers import Rational


def to_fraction(value: float | str | Rational) -> Fraction:
    """按十进制字面值精确转换为 Fraction（1.5 → 3/2，而不是二进制近似）"""
    if isinstance(value, Rational):
        return Fraction(value)
    return Fraction(str(value))


def ceil_fraction(value: Fraction) -> int:
    """向上取整"""
    return math.ceil(value)


def dot(a: Sequence[Fraction | int], b: Sequence[Fraction | int]) -> Fraction:
    """精确内积"""
    return sum((Fraction(x) * y for x, y in zip(a, b, strict=True)), Fraction(0))
