"""
取整方向 QUBO

候选向量 u(x) = b_op - Σ_j x_j d_j，残差 r = t - b_op，则
||t - u(x)||² = ||r||² + Σ_j Q_jj x_j + Σ_{i<j} Q_ij x_i x_j，
其中 Q_jj = 2⟨r, d_j⟩ + ||d_j||²，Q_ij = 2⟨d_i, d_j⟩。
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from schnorr_qaoa.errors import DegenerateQuboError, InvalidInputError
from schnorr_qaoa.lattice.babai import BabaiResult
from schnorr_qaoa.lattice.lll import ReducedBasis
from schnorr_qaoa.utils.rational import dot

logger = logging.getLogger(__name__)

Matrix = tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class QuboProblem:
    """
    上三角 QUBO 系数矩阵

    Attributes:
        raw: 原始系数
        normalized: raw / norm_factor
        norm_factor: 归一化因子（raw 上三角部分的最大有符号元素）
        constant: 省略的常数项 ||r||²
    """

    raw: Matrix
    normalized: Matrix
    norm_factor: Fraction
    constant: Fraction

    @property
    def n(self) -> int:
        return len(self.raw)

    def energy(self, x: Sequence[int]) -> Fraction:
        """原始能量 Σ_{i≤j} Q_ij x_i x_j（不含常数项）"""
        if len(x) != self.n:
            raise InvalidInputError(f"赋值长度 {len(x)} 与 QUBO 维度 {self.n} 不一致")
        total = Fraction(0)
        for i in range(self.n):
            if not x[i]:
                continue
            for j in range(i, self.n):
                if x[j]:
                    total += self.raw[i][j]
        return total

    def as_array(self) -> np.ndarray:
        """归一化矩阵的浮点副本"""
        return np.array([[float(v) for v in row] for row in self.normalized], dtype=float)


def normalization_factor(raw: Sequence[Sequence[Fraction]]) -> Fraction:
    """
    上三角最大有符号元素

    所有元素都 ≤ 0 时退回到最大绝对值，保证除数为正、极小化方向不变。

    Raises:
        DegenerateQuboError: 矩阵全为零
    """
    entries = [raw[i][j] for i in range(len(raw)) for j in range(i, len(raw))]
    if not entries or all(v == 0 for v in entries):
        raise DegenerateQuboError("QUBO 系数全为零")
    factor = max(entries)
    if factor <= 0:
        factor = max(abs(v) for v in entries)
        logger.debug(f"⚠️ QUBO 无正元素，按最大绝对值 {factor} 归一化")
    return factor


def build_qubo(result: BabaiResult, reduced: ReducedBasis) -> QuboProblem:
    """
    由 Babai 残差与约化基构造 QUBO

    Args:
        result: Babai 结果
        reduced: LLL 约化基

    Returns:
        QuboProblem: 原始与归一化矩阵

    Raises:
        DegenerateQuboError: 原始矩阵全为零
    """
    n = reduced.n
    if result.n != n:
        raise InvalidInputError(f"Babai 结果维度 {result.n} 与约化基 {n} 不一致")
    r = result.residual
    d = reduced.vectors

    raw = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        raw[i][i] = 2 * dot(r, d[i]) + dot(d[i], d[i])
        for j in range(i + 1, n):
            raw[i][j] = 2 * dot(d[i], d[j])

    factor = normalization_factor(raw)
    normalized = [[v / factor for v in row] for row in raw]
    return QuboProblem(
        raw=tuple(tuple(row) for row in raw),
        normalized=tuple(tuple(row) for row in normalized),
        norm_factor=factor,
        constant=dot(r, r),
    )
