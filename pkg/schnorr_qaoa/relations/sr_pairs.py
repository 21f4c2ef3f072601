"""
sr-pair 提取与校验

候选格向量 u(x) = b_op - Σ_j x_j d_j 的前 n 个坐标除以对角权重得到指数向量 e，
u = Π_{e_i>0} p_i^{e_i}，v = Π_{e_i<0} p_i^{-e_i}，s = u - v·N。
s 在扩展因子基 B2 上光滑时 (u, v) 构成一个 sr-pair。
"""

import logging
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from schnorr_qaoa.errors import CandidateInconsistencyError, InvalidInputError
from schnorr_qaoa.lattice.babai import BabaiResult
from schnorr_qaoa.lattice.lll import ReducedBasis
from schnorr_qaoa.lattice.prime_lattice import PrimeLattice
from schnorr_qaoa.numtheory import FactorBase, SmoothFactorization, factor_over_base
from schnorr_qaoa.utils.bitstrings import bits_of, validate_bitstring

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SrPair:
    """
    光滑关系对

    Attributes:
        u: 正整数
        v: 正整数
        u_fact: u 在 B1 上的分解
        s: u - v·N
        s_fact: s 在 B2 上的分解（含符号）
    """

    u: int
    v: int
    u_fact: SmoothFactorization
    s: int
    s_fact: SmoothFactorization

    @property
    def key(self) -> tuple[int, int]:
        return (self.u, self.v)

    def __str__(self) -> str:
        return f"({self.u}, {self.v})"


class RelationSet:
    """
    按 (u, v) 去重的 sr-pair 集合

    插入顺序即收集顺序；threshold = B2 + 1 是保证可分解的收集数量。
    """

    def __init__(self, threshold: int):
        if threshold < 1:
            raise InvalidInputError(f"threshold 必须 ≥ 1，收到 {threshold}")
        self.threshold = threshold
        self._pairs: dict[tuple[int, int], SrPair] = {}

    def add(self, pair: SrPair) -> bool:
        """插入，返回是否为新 pair"""
        if pair.key in self._pairs:
            return False
        self._pairs[pair.key] = pair
        return True

    @property
    def pairs(self) -> tuple[SrPair, ...]:
        return tuple(self._pairs.values())

    @property
    def is_complete(self) -> bool:
        return len(self._pairs) >= self.threshold

    def __len__(self) -> int:
        return len(self._pairs)

    def __iter__(self) -> Iterator[SrPair]:
        return iter(self._pairs.values())

    def __contains__(self, key: object) -> bool:
        if isinstance(key, SrPair):
            key = key.key
        return key in self._pairs


def bitstring_to_candidate(
    x: str,
    babai: BabaiResult,
    reduced: ReducedBasis,
    lattice: PrimeLattice,
) -> tuple[int, ...]:
    """
    比特串 → 候选格向量的指数向量

    Args:
        x: 长度为 n 的比特串（第 1 位对应 d_1）
        babai: Babai 结果
        reduced: 约化基
        lattice: 原始素数格（提供对角权重）

    Returns:
        tuple[int, ...]: 指数向量 e

    Raises:
        CandidateInconsistencyError: 坐标不能被对角权重整除
    """
    n = reduced.n
    validate_bitstring(x, n)
    u = list(babai.approx_vector)
    for bit, d_j in zip(bits_of(x), reduced.vectors, strict=True):
        if bit:
            u = [a - b for a, b in zip(u, d_j, strict=True)]

    exponents = []
    for i, weight in enumerate(lattice.weights):
        q, rem = divmod(u[i], weight)
        if rem:
            raise CandidateInconsistencyError(
                f"候选向量第 {i + 1} 个坐标 {u[i]} 不能被权重 {weight} 整除"
            )
        exponents.append(q)
    return tuple(exponents)


def exponents_to_uv(e: Sequence[int], base: FactorBase) -> tuple[int, int]:
    """
    指数向量 → (u, v)

    Args:
        e: 指数向量，长度等于因子基大小
        base: 因子基

    Returns:
        tuple[int, int]: u = Π_{e_i>0} p_i^{e_i}，v = Π_{e_i<0} p_i^{-e_i}
    """
    if len(e) != base.size:
        raise InvalidInputError(f"指数长度 {len(e)} 与因子基大小 {base.size} 不一致")
    u = v = 1
    for p, exponent in zip(base.primes, e, strict=True):
        if exponent > 0:
            u *= p**exponent
        elif exponent < 0:
            v *= p ** (-exponent)
    return u, v


def verify_sr_pair(
    u: int,
    v: int,
    N: int,
    b2_base: FactorBase,
    b1_base: FactorBase | None = None,
) -> SrPair | None:
    """
    校验 (u, v) 是否为 sr-pair

    Args:
        u: 正整数
        v: 正整数
        N: 被分解的整数
        b2_base: 扩展因子基（检验 s 的光滑性）
        b1_base: 主因子基（分解 u），缺省时使用 b2_base

    Returns:
        SrPair | None: s ≠ 0 且 s 在 B2 上光滑时返回 sr-pair
    """
    if u < 1 or v < 1:
        raise InvalidInputError(f"u, v 必须 ≥ 1，收到 ({u}, {v})")
    if u == 1 and v == 1:
        return None
    s = u - v * N
    if s == 0:
        return None
    s_fact = factor_over_base(s, b2_base)
    if s_fact is None:
        return None
    u_fact = factor_over_base(u, b1_base or b2_base)
    if u_fact is None:
        logger.debug(f"⚠️ ({u}, {v}) 的 u 在主因子基上不光滑，丢弃")
        return None
    return SrPair(u=u, v=v, u_fact=u_fact, s=s, s_fact=s_fact)
