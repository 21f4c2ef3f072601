"""
LLL 格基约化（精确有理数运算）

使用 fractions.Fraction 维护 Gram-Schmidt 系数 μ 与范数平方 B，
交换时按增量公式更新，不做浮点近似。
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from schnorr_qaoa.errors import InvalidInputError
from schnorr_qaoa.utils.rational import dot, to_fraction

logger = logging.getLogger(__name__)

Vector = tuple[int, ...]


@dataclass(frozen=True)
class ReducedBasis:
    """
    LLL 约化后的基

    Attributes:
        vectors: 约化后的 n 个整数向量 d_1..d_n
        mu: Gram-Schmidt 系数（下三角，对角为 1）
        gs_norms_sq: ||d*_j||²
        gs_vectors: Gram-Schmidt 正交向量 d*_j
        transform: 幺模矩阵 T，d_j = Σ_i T[i][j] · b_i
        delta: 约化参数 δ
    """

    vectors: tuple[Vector, ...]
    mu: tuple[tuple[Fraction, ...], ...]
    gs_norms_sq: tuple[Fraction, ...]
    gs_vectors: tuple[tuple[Fraction, ...], ...]
    transform: tuple[tuple[int, ...], ...]
    delta: Fraction

    @property
    def n(self) -> int:
        return len(self.vectors)

    @property
    def dimension(self) -> int:
        return len(self.vectors[0])


def gram_schmidt(
    vectors: Sequence[Sequence[int]],
) -> tuple[list[list[Fraction]], list[list[Fraction]], list[Fraction]]:
    """
    精确 Gram-Schmidt 正交化

    Args:
        vectors: 输入向量（按顺序）

    Returns:
        (正交向量, μ 矩阵, 范数平方)

    Raises:
        InvalidInputError: 向量线性相关
    """
    n = len(vectors)
    ortho: list[list[Fraction]] = []
    mu = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    norms: list[Fraction] = []
    for i, v in enumerate(vectors):
        w = [Fraction(x) for x in v]
        for j in range(i):
            mu[i][j] = dot(v, ortho[j]) / norms[j]
            w = [wk - mu[i][j] * ok for wk, ok in zip(w, ortho[j], strict=True)]
        norm = dot(w, w)
        if norm == 0:
            raise InvalidInputError(f"基向量线性相关（第 {i + 1} 个向量落在前面向量张成的空间内）")
        ortho.append(w)
        norms.append(norm)
    return ortho, mu, norms


def lll_reduce(basis: Sequence[Sequence[int]], delta: Fraction | float = Fraction(3, 4)) -> ReducedBasis:
    """
    LLL 约化

    Args:
        basis: n 个线性无关的整数向量
        delta: 约化参数，1/4 < δ < 1

    Returns:
        ReducedBasis: 满足尺寸约化与 Lovász 条件的基

    Raises:
        InvalidInputError: δ 越界、维度不一致或基线性相关
    """
    delta = to_fraction(delta)
    if not Fraction(1, 4) < delta < 1:
        raise InvalidInputError(f"δ 必须满足 1/4 < δ < 1，收到 {delta}")
    if not basis:
        raise InvalidInputError("基不能为空")
    dim = len(basis[0])
    if any(len(v) != dim for v in basis):
        raise InvalidInputError("基向量维度不一致")

    b = [[int(x) for x in v] for v in basis]
    n = len(b)
    _, mu, B = gram_schmidt(b)
    T = [[int(i == j) for j in range(n)] for i in range(n)]

    def size_reduce(k: int, j: int) -> None:
        if abs(mu[k][j]) <= Fraction(1, 2):
            return
        q = round(mu[k][j])
        b[k] = [x - q * y for x, y in zip(b[k], b[j], strict=True)]
        for row in T:
            row[k] -= q * row[j]
        mu[k][j] -= q
        for i in range(j):
            mu[k][i] -= q * mu[j][i]

    def swap(k: int) -> None:
        b[k], b[k - 1] = b[k - 1], b[k]
        for row in T:
            row[k], row[k - 1] = row[k - 1], row[k]
        for j in range(k - 1):
            mu[k][j], mu[k - 1][j] = mu[k - 1][j], mu[k][j]
        m = mu[k][k - 1]
        new_b = B[k] + m * m * B[k - 1]
        mu[k][k - 1] = m * B[k - 1] / new_b
        B[k] = B[k - 1] * B[k] / new_b
        B[k - 1] = new_b
        for i in range(k + 1, n):
            t = mu[i][k]
            mu[i][k] = mu[i][k - 1] - m * t
            mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k]

    swaps = 0
    k = 1
    while k < n:
        for j in range(k - 1, -1, -1):
            size_reduce(k, j)
        if B[k] >= (delta - mu[k][k - 1] ** 2) * B[k - 1]:
            k += 1
        else:
            swap(k)
            swaps += 1
            k = max(k - 1, 1)

    ortho, mu_final, norms = gram_schmidt(b)
    logger.debug(f"LLL 完成: n={n}, δ={delta}, 交换次数={swaps}")
    return ReducedBasis(
        vectors=tuple(tuple(v) for v in b),
        mu=tuple(tuple(row) for row in mu_final),
        gs_norms_sq=tuple(norms),
        gs_vectors=tuple(tuple(w) for w in ortho),
        transform=tuple(tuple(row) for row in T),
        delta=delta,
    )
