"""
Babai 算法（系数向上取整）

nearest_plane: 沿 Gram-Schmidt 方向从 j = n 到 1 依次消去，每步系数取 ⌈c_j⌉。
rounding: 先求目标在约化基下的精确坐标，再逐个向上取整。
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from schnorr_qaoa.errors import InvalidInputError
from schnorr_qaoa.lattice.lll import ReducedBasis
from schnorr_qaoa.utils.rational import ceil_fraction, dot

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BabaiResult:
    """
    Babai 近似解

    Attributes:
        coefficients: 取整后的系数 k_j
        real_coefficients: 取整前的系数 c_j
        approx_vector: b_op = Σ k_j d_j
        residual: r = t - b_op
    """

    coefficients: tuple[int, ...]
    real_coefficients: tuple[Fraction, ...]
    approx_vector: tuple[int, ...]
    residual: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.coefficients)


def _check_dimensions(reduced: ReducedBasis, target: Sequence[int]) -> None:
    if len(target) != reduced.dimension:
        raise InvalidInputError(
            f"目标向量维度 {len(target)} 与格维度 {reduced.dimension} 不一致"
        )


def babai_nearest_plane_ceil(reduced: ReducedBasis, target: Sequence[int]) -> BabaiResult:
    """
    最近平面算法，系数向上取整

    Args:
        reduced: LLL 约化基
        target: 目标向量 t

    Returns:
        BabaiResult: 系数、b_op 与残差
    """
    _check_dimensions(reduced, target)
    n = reduced.n
    b = [int(x) for x in target]
    coefficients = [0] * n
    real_coefficients = [Fraction(0)] * n

    for j in range(n - 1, -1, -1):
        c_j = dot(b, reduced.gs_vectors[j]) / reduced.gs_norms_sq[j]
        k_j = ceil_fraction(c_j)
        real_coefficients[j] = c_j
        coefficients[j] = k_j
        b = [x - k_j * d for x, d in zip(b, reduced.vectors[j], strict=True)]

    approx = tuple(t - r for t, r in zip(target, b, strict=True))
    logger.debug(f"Babai(nearest_plane): k={coefficients}, r={b}")
    return BabaiResult(
        coefficients=tuple(coefficients),
        real_coefficients=tuple(real_coefficients),
        approx_vector=approx,
        residual=tuple(b),
    )


def babai_round_ceil(reduced: ReducedBasis, target: Sequence[int]) -> BabaiResult:
    """
    取整变体：目标在约化基下的坐标 a_j 逐个向上取整

    坐标由 Gram-Schmidt 系数回代求得：a_i = c*_i - Σ_{j>i} a_j μ_{j,i}。

    Args:
        reduced: LLL 约化基
        target: 目标向量 t

    Returns:
        BabaiResult: 系数、b_op 与残差
    """
    _check_dimensions(reduced, target)
    n = reduced.n
    projected = [
        dot(target, reduced.gs_vectors[i]) / reduced.gs_norms_sq[i] for i in range(n)
    ]
    coords = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        coords[i] = projected[i] - sum(
            (coords[j] * reduced.mu[j][i] for j in range(i + 1, n)), Fraction(0)
        )

    coefficients = [ceil_fraction(a) for a in coords]
    approx = [0] * reduced.dimension
    for k_j, d_j in zip(coefficients, reduced.vectors, strict=True):
        approx = [x + k_j * d for x, d in zip(approx, d_j, strict=True)]
    residual = tuple(t - a for t, a in zip(target, approx, strict=True))
    logger.debug(f"Babai(rounding): k={coefficients}, r={residual}")
    return BabaiResult(
        coefficients=tuple(coefficients),
        real_coefficients=tuple(coords),
        approx_vector=tuple(approx),
        residual=residual,
    )
