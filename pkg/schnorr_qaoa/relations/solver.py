"""
平方同余求解

每个 sr-pair 给出 u ≡ s (mod N)。取 GF(2) 向量
[u 在 B1 上的指数 ‖ s 的符号位 ‖ s 在 B2 上的指数]，
左零空间中的每个依赖关系使 Π u 与 Π s 同为完全平方，
X = √Π u mod N，Y = √Π s mod N，检验 gcd(X - Y, N)。
"""

import logging
from dataclasses import dataclass

from schnorr_qaoa.errors import InvalidInputError
from schnorr_qaoa.numtheory import FactorBase, factor_over_base, gcd
from schnorr_qaoa.relations.gf2 import gf2_left_nullspace, pack_bits, selected_indices
from schnorr_qaoa.relations.sr_pairs import RelationSet, SrPair

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FactorResult:
    """
    非平凡分解 N = p · q，1 < p ≤ q < N
    """

    p: int
    q: int

    def __post_init__(self):
        if not 1 < self.p <= self.q:
            raise InvalidInputError(f"不是规范的非平凡分解: ({self.p}, {self.q})")

    @classmethod
    def from_divisor(cls, N: int, d: int) -> "FactorResult":
        p, q = sorted((d, N // d))
        if p * q != N:
            raise InvalidInputError(f"{d} 不是 {N} 的因子")
        return cls(p=p, q=q)

    @property
    def N(self) -> int:
        return self.p * self.q

    def __str__(self) -> str:
        return f"{self.N} = {self.p} × {self.q}"


def _relation_row(
    u_exponents: tuple[int, ...], pair: SrPair
) -> list[int]:
    sign_bit = 1 if pair.s_fact.sign < 0 else 0
    return [*u_exponents, sign_bit, *pair.s_fact.exponents]


def _square_root_mod(exponent_sums: list[int], base: FactorBase, N: int) -> int:
    root = 1
    for p, total in zip(base.primes, exponent_sums, strict=True):
        root = root * pow(p, total // 2, N) % N
    return root


def try_factor(
    rel: RelationSet, N: int, b1_base: FactorBase, b2_base: FactorBase
) -> FactorResult | None:
    """
    由已收集的 sr-pair 尝试分解 N

    Args:
        rel: sr-pair 集合
        N: 被分解的整数
        b1_base: 主因子基
        b2_base: 扩展因子基

    Returns:
        FactorResult | None: 第一个非平凡分解；所有依赖关系都平凡时返回 None
    """
    usable: list[tuple[SrPair, tuple[int, ...]]] = []
    for pair in rel:
        u_fact = factor_over_base(pair.u, b1_base)
        if u_fact is None:
            logger.warning(f"⚠️ sr-pair {pair} 的 u 在主因子基上不光滑，跳过")
            continue
        usable.append((pair, u_fact.exponents))
    if not usable:
        return None

    rows = [pack_bits(_relation_row(u_exp, pair)) for pair, u_exp in usable]
    width = b1_base.size + 1 + b2_base.size
    dependencies = gf2_left_nullspace(rows, width)
    logger.debug(f"GF(2) 系统: {len(rows)} 个关系, {width} 列, {len(dependencies)} 个依赖")

    for mask in dependencies:
        chosen = [usable[i] for i in selected_indices(mask)]
        u_sums = [sum(col) for col in zip(*(u_exp for _, u_exp in chosen), strict=True)]
        s_sums = [sum(col) for col in zip(*(p.s_fact.exponents for p, _ in chosen), strict=True)]
        X = _square_root_mod(u_sums, b1_base, N)
        Y = _square_root_mod(s_sums, b2_base, N)
        d = gcd((X - Y) % N, N)
        logger.debug(
            f"   依赖 {[str(p) for p, _ in chosen]}: X={X}, Y={Y}, gcd(X-Y, N)={d}"
        )
        if 1 < d < N:
            result = FactorResult.from_divisor(N, d)
            logger.info(f"✅ 平方同余成功: {result}")
            return result
    return None
