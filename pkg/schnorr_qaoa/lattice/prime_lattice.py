"""
Schnorr 素数格构造

基矢量 j（列向量，维度 n+1）= f(j)·e_j + round(10^c · ln p_j)·e_{n+1}，
目标向量 t = (0, …, 0, round(10^c · ln N))。
对角权重 f(i) = ⌈σ(i)/2⌉ 由随机置换 σ 决定。
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

import mpmath
import numpy as np

from schnorr_qaoa.errors import InvalidInputError
from schnorr_qaoa.numtheory import FactorBase

logger = logging.getLogger(__name__)

# 对数计算的十进制精度（位）
LOG_PRECISION_DIGITS = 50


@dataclass(frozen=True)
class Permutation:
    """
    {1..n} 上的置换

    Attributes:
        sigma: σ(1), …, σ(n)
    """

    sigma: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.sigma) != list(range(1, len(self.sigma) + 1)):
            raise InvalidInputError(f"不是 1..n 上的置换: {self.sigma}")

    @property
    def n(self) -> int:
        return len(self.sigma)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def random(cls, n: int, rng: np.random.Generator) -> "Permutation":
        """均匀随机置换"""
        return cls(tuple(int(s) + 1 for s in rng.permutation(n)))

    def weights(self) -> tuple[int, ...]:
        """对角权重 f(i) = ⌈σ(i)/2⌉"""
        return tuple((s + 1) // 2 for s in self.sigma)

    def __str__(self) -> str:
        return "(" + ", ".join(str(s) for s in self.sigma) + ")"


@dataclass(frozen=True)
class PrimeLattice:
    """
    CVP 实例：素数格 + 目标向量

    Attributes:
        basis: n 个列向量，每个维度 n+1
        target: 目标向量，维度 n+1
        c: 取整参数
        weights: 对角权重 f(1..n)
        N: 被分解的整数
        sigma: 生成对角权重的置换
    """

    basis: tuple[tuple[int, ...], ...]
    target: tuple[int, ...]
    c: Fraction
    weights: tuple[int, ...]
    N: int
    sigma: Permutation

    @property
    def n(self) -> int:
        return len(self.basis)

    def last_row(self) -> tuple[int, ...]:
        return tuple(column[-1] for column in self.basis)

    def rows(self) -> list[list[int]]:
        """按行展开的 (n+1)×n 矩阵"""
        return [[column[i] for column in self.basis] for i in range(self.n + 1)]


def scaled_log(value: int, c: Fraction) -> int:
    """
    round(10^c · ln value)，半数远离零

    mpmath 以 LOG_PRECISION_DIGITS 位精度计算，保证取整没有歧义。
    """
    with mpmath.workdps(LOG_PRECISION_DIGITS):
        exponent = mpmath.mpf(c.numerator) / c.denominator
        scaled = mpmath.power(10, exponent) * mpmath.log(value)
        rounded = mpmath.floor(abs(scaled) + mpmath.mpf(1) / 2)
        return int(rounded) if scaled >= 0 else -int(rounded)


def build_prime_lattice(N: int, base: FactorBase, c: Fraction, sigma: Permutation) -> PrimeLattice:
    """
    构造素数格与目标向量

    Args:
        N: 被分解的整数（≥ 2）
        base: 因子基，大小等于 n
        c: 取整参数（正有理数）
        sigma: 置换，长度等于 n

    Returns:
        PrimeLattice: CVP 实例
    """
    n = base.size
    if N < 2:
        raise InvalidInputError(f"N 必须 ≥ 2，收到 {N}")
    if sigma.n != n:
        raise InvalidInputError(f"置换长度 {sigma.n} 与因子基大小 {n} 不一致")
    c = Fraction(c)
    if c <= 0:
        raise InvalidInputError(f"取整参数 c 必须为正，收到 {c}")

    weights = sigma.weights()
    basis = []
    for j, p in enumerate(base.primes):
        column = [0] * (n + 1)
        column[j] = weights[j]
        column[n] = scaled_log(p, c)
        basis.append(tuple(column))

    target = tuple([0] * n + [scaled_log(N, c)])
    logger.debug(f"素数格: σ={sigma}, 对角={weights}, 最后一行={[b[n] for b in basis]}, t={target[n]}")
    return PrimeLattice(
        basis=tuple(basis), target=target, c=c, weights=weights, N=N, sigma=sigma
    )
