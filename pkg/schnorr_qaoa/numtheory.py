"""
数论工具模块

素数因子基、基上光滑性检测（试除法）以及分解流水线用到的整数守卫。
所有整数均为 Python 任意精度整数。
"""

import logging
import math
from collections.abc import Iterator
from dataclasses import dataclass

import sympy

from schnorr_qaoa.errors import InvalidInputError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FactorBase:
    """
    因子基：前 size 个素数，按升序排列

    Attributes:
        primes: 素数元组 (2, 3, 5, ...)
    """

    primes: tuple[int, ...]

    def __post_init__(self):
        if not self.primes:
            raise InvalidInputError("因子基至少包含一个素数")
        if list(self.primes) != list(sympy.primerange(2, self.primes[-1] + 1)):
            raise InvalidInputError(f"因子基必须是从 2 开始的连续素数: {self.primes}")

    @property
    def size(self) -> int:
        return len(self.primes)

    def index(self, p: int) -> int:
        """素数 p 在因子基中的位置（从 0 开始）"""
        try:
            return self.primes.index(p)
        except ValueError:
            raise InvalidInputError(f"{p} 不在因子基中") from None

    def __iter__(self) -> Iterator[int]:
        return iter(self.primes)

    def __len__(self) -> int:
        return len(self.primes)


@dataclass(frozen=True)
class SmoothFactorization:
    """
    整数在因子基上的分解：m = sign · Π p_i^exponents[i]

    Attributes:
        sign: +1 或 -1
        exponents: 每个基素数的非负指数
    """

    sign: int
    exponents: tuple[int, ...]

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise InvalidInputError(f"符号必须是 ±1: {self.sign}")
        if any(e < 0 for e in self.exponents):
            raise InvalidInputError(f"指数必须非负: {self.exponents}")

    def reconstruct(self, base: FactorBase) -> int:
        """按因子基还原被分解的整数"""
        if len(self.exponents) != base.size:
            raise InvalidInputError(
                f"指数长度 {len(self.exponents)} 与因子基大小 {base.size} 不一致"
            )
        value = self.sign
        for p, e in zip(base.primes, self.exponents, strict=True):
            value *= p**e
        return value


def first_primes(k: int) -> FactorBase:
    """
    生成由前 k 个素数组成的因子基

    Args:
        k: 素数个数（≥ 1）

    Returns:
        FactorBase: {2, 3, 5, ...}
    """
    if k < 1:
        raise InvalidInputError(f"因子基大小必须 ≥ 1，收到 {k}")
    return FactorBase(tuple(int(p) for p in sympy.primerange(2, sympy.prime(k) + 1)))


def factor_over_base(m: int, base: FactorBase) -> SmoothFactorization | None:
    """
    试除法判断 |m| 是否在因子基上光滑

    Args:
        m: 非零整数
        base: 因子基

    Returns:
        SmoothFactorization | None: 光滑时返回分解，否则返回 None

    Raises:
        InvalidInputError: m = 0
    """
    if m == 0:
        raise InvalidInputError("不能在因子基上分解 0")

    sign = 1 if m > 0 else -1
    rest = abs(m)
    exponents = []
    for p in base.primes:
        e = 0
        while rest % p == 0:
            rest //= p
            e += 1
        exponents.append(e)

    if rest != 1:
        return None
    return SmoothFactorization(sign=sign, exponents=tuple(exponents))


def gcd(a: int, b: int) -> int:
    """最大公约数（结果非负，gcd(0, b) = |b|）"""
    return math.gcd(a, b)


def is_perfect_power(N: int) -> tuple[int, int] | None:
    """
    完全幂检测

    Returns:
        tuple[int, int] | None: N = base^exponent（exponent ≥ 2）时返回 (base, exponent)
    """
    if N < 4:
        return None
    result = sympy.perfect_power(N)
    if not result:
        return None
    b, e = result
    return int(b), int(e)


def small_factor(N: int, base: FactorBase) -> int | None:
    """返回能整除 N 的最小基素数（不等于 N 本身），没有则返回 None"""
    for p in base.primes:
        if p < N and N % p == 0:
            return p
    return None


def is_prime(N: int) -> bool:
    return bool(sympy.isprime(N))
